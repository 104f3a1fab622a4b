"""Existence sweep for rational first integrals of random quadratic fields.

For each seed a field is either built from a known integral u/v (u, v of
degree <= 2) or drawn at random. The detL test is run for d = 1, 2 and the
recovered integral is shown when one is found.

    python scripts/integral_sweep.py --count 10 --seed 3
"""
import argparse
import random
import time

from mpk.derivation import Derivation, RationalFunction, is_integral
from mpk.lagutinski import derivation_from_integral, find_rational_integral
from mpk.poly import Polynomial


def random_poly(rng: random.Random, degree: int) -> Polynomial:
    return Polynomial({(i, t - i): rng.randint(-3, 3) for t in range(degree + 1) for i in range(t + 1)
                       if rng.random() < 0.6})


def field(rng: random.Random, constructed: bool):
    while True:
        if constructed:
            f = RationalFunction(random_poly(rng, 2), random_poly(rng, 2) or Polynomial({(0, 0): 1}))
            if f.is_constant():
                continue
            D = derivation_from_integral(f)
        else:
            D = Derivation(random_poly(rng, 2), random_poly(rng, 2))
        if not (D.p.is_zero() and D.q.is_zero()):
            return D


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=8)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--dmax", type=int, default=2)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for k in range(args.count):
        D = field(rng, constructed=k % 2 == 0)
        print(f"D = ({D.p}) d/dx + ({D.q}) d/dy")
        for d in range(1, args.dmax + 1):
            t0 = time.perf_counter()
            rep = find_rational_integral(D, d)
            dt = time.perf_counter() - t0
            if not rep.exists:
                print(f"  d={d}: none ({dt:.2f} s)")
                continue
            found = rep.integral if rep.integral is not None else "not recovered"
            verified = rep.integral is not None and is_integral(D, rep.integral)
            print(f"  d={d}: {found}  verified={verified} ({dt:.2f} s)")
            break


if __name__ == "__main__":
    main()
