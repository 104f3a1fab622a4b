"""Quarter-arc table on the semi-axis grid {0.5, 1, 2, 4, 8}^2.

Compares the MAGM/AGM closed form with adaptive quadrature of the arc-length
integrand and prints the difference for every cell.
"""
import math

from mpk.means import elliptic_arc
from mpk.quadrature import integrate

GRID = (0.5, 1.0, 2.0, 4.0, 8.0)


def main() -> None:
    print(f"{'a':>5} {'b':>5} {'magm/agm':>20} {'quadrature':>20} {'diff':>9} {'evals':>6}")
    worst = 0.0
    for a in GRID:
        for b in GRID:
            closed = elliptic_arc(a, b)
            r = integrate(lambda p: math.hypot(a * math.cos(p), b * math.sin(p)), 0.0, math.pi / 2, 1e-13)
            diff = abs(closed - r.value)
            worst = max(worst, diff)
            print(f"{a:5g} {b:5g} {closed:20.15f} {r.value:20.15f} {diff:9.1e} {r.evaluations:6d}")
    print(f"max |diff| = {worst:.2e}")


if __name__ == "__main__":
    main()
