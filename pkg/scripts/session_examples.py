"""Replay the worked session: means, special functions, Laplace pair, detL values.

Each line shows the command, the expected printout and what mpk produced.
Exit status is non-zero if any of them differ.
"""
import io
import sys

from mpk.cli import run

SESSION = [
    (["agm", "1", "5", "--digits", "3"], "2.604"),
    (["ghm", "1", "5", "--digits", "3"], "1.920"),
    (["beta", "2", "3", "--digits", "4"], "0.0833"),
    (["laplace", "exp(3*t)"], "1/(s - 3)"),
    (["invlaplace", "1/(s - 3)"], "exp(3 * t)"),
    (["detl", "1", "--p", "1", "--q", "1"], "1"),
    (["detl", "3", "--p", "1", "--q", "1"], "0"),
    (["detl", "3", "--p", "x", "--q", "-y"], "-2*x*y"),
    (["detl", "5", "--p", "x", "--q", "-y"], "0"),
    (["detl", "3", "--p", "x", "--q", "y"], "0"),
]


def main() -> int:
    bad = 0
    for argv, want in SESSION:
        out = io.StringIO()
        run(argv, out, sys.stderr, env={})
        got = out.getvalue().strip()
        bad += got != want
        print(f"{'ok ' if got == want else 'BAD'} mpk {' '.join(argv):<36} -> {got}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
