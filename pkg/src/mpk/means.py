"""The arithmetic-geometric mean family and the elliptic quantities built on it.

All three iterations converge quadratically, so the 64-step cap is never
reached for sane input; reaching it raises :class:`ConvergenceError`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

__all__ = [
    "MeanResult",
    "ConvergenceError",
    "MAX_ITERATIONS",
    "agm",
    "ghm",
    "magm",
    "elliptic_arc",
    "ellipse_circumference",
    "elliptic_k",
    "elliptic_e",
]

MAX_ITERATIONS = 64
DEFAULT_TOL = 1e-15
_SLACK = 4 * 2.220446049250313e-16


@dataclass(frozen=True)
class MeanResult:
    value: float
    iterations: int
    residual: float
    # |a_n - b_n| after every step, for convergence diagnostics
    residuals: Tuple[float, ...] = ()

    def __float__(self) -> float:
        return self.value


class ConvergenceError(ArithmeticError):
    pass


def _check_positive(**kw) -> None:
    for name, v in kw.items():
        if not (isinstance(v, (int, float)) and v > 0 and math.isfinite(v)):
            raise ValueError(f"{name} must be a positive finite number, got {v!r}")


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")


def agm(a: float, b: float, tol: float = DEFAULT_TOL) -> MeanResult:
    """Arithmetic-geometric mean of two positive numbers."""
    _check_positive(a=a, b=b)
    _check_tol(tol)
    a, b = float(a), float(b)
    res = []
    n = 0
    hi, lo = max(a, b), min(a, b)
    while abs(a - b) > tol * abs(a):
        if n == MAX_ITERATIONS:
            raise ConvergenceError(f"agm did not converge in {MAX_ITERATIONS} steps")
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        n += 1
        # after the first step the arithmetic term is the upper bracket
        assert a <= hi * (1 + _SLACK) and b >= lo * (1 - _SLACK), "AGM lost its bracket"
        hi, lo = a, b
        res.append(abs(a - b))
    return MeanResult(a, n, abs(a - b), tuple(res))


def ghm(a: float, b: float, tol: float = DEFAULT_TOL) -> MeanResult:
    """Geometric-harmonic mean: g <- sqrt(g h), h <- 2 g h / (g + h).

    Equal to 1 / agm(1/a, 1/b).
    """
    _check_positive(a=a, b=b)
    _check_tol(tol)
    g, h = float(a), float(b)
    res = []
    n = 0
    while abs(g - h) > tol * abs(g):
        if n == MAX_ITERATIONS:
            raise ConvergenceError(f"ghm did not converge in {MAX_ITERATIONS} steps")
        g, h = math.sqrt(g * h), 2.0 * g * h / (g + h)
        n += 1
        res.append(abs(g - h))
    return MeanResult(g, n, abs(g - h), tuple(res))


def magm(a: float, b: float, tol: float = DEFAULT_TOL) -> MeanResult:
    """Modified arithmetic-geometric mean.

    a <- (a + b)/2,  b <- c + r,  c <- c - r,  r = sqrt((a - c)(b - c)),
    starting from c = 0; the value is the common limit of a and b.

    c runs off to -inf, so b = c + r cancels catastrophically in floating
    point. The loop instead carries u = a - c and v = b - c, for which

        u <- (u + v)/2 + r,  v <- 2 r,  a - b <- (sqrt(u) - sqrt(v))^2 / 2,

    and recovers a from a <- a - (a - b)/2.
    """
    _check_positive(a=a, b=b)
    _check_tol(tol)
    x = float(a)
    u, v = float(a), float(b)
    gap = x - float(b)
    res = []
    n = 0
    while abs(gap) > tol * abs(x):
        if n == MAX_ITERATIONS:
            raise ConvergenceError(f"magm did not converge in {MAX_ITERATIONS} steps")
        prod = u * v
        if prod < 0:
            raise ArithmeticError(f"magm: negative radicand {prod!r} at step {n}")
        r = math.sqrt(prod)
        x -= 0.5 * gap
        gap = 0.5 * (math.sqrt(u) - math.sqrt(v)) ** 2
        u, v = 0.5 * (u + v) + r, 2.0 * r
        n += 1
        res.append(gap)
    return MeanResult(x, n, abs(gap), tuple(res))


def elliptic_arc(a: float, b: float, tol: float = DEFAULT_TOL) -> float:
    """Quarter arc length: integral over [0, pi/2] of sqrt(a^2 cos^2 + b^2 sin^2)."""
    _check_positive(a=a, b=b)
    return 0.5 * math.pi * magm(a * a, b * b, tol).value / agm(a, b, tol).value


def ellipse_circumference(a: float, b: float, tol: float = DEFAULT_TOL) -> float:
    """Perimeter of the ellipse with semi-axes a and b."""
    _check_positive(a=a, b=b)
    return 2.0 * math.pi * magm(a * a, b * b, tol).value / agm(a, b, tol).value


def elliptic_k(k: float, tol: float = DEFAULT_TOL) -> float:
    """Complete elliptic integral of the first kind, modulus k in [0, 1)."""
    if not 0.0 <= k < 1.0:
        raise ValueError(f"elliptic_k needs 0 <= k < 1, got {k!r}")
    return 0.5 * math.pi / agm(1.0, math.sqrt(1.0 - k * k), tol).value


def elliptic_e(k: float, tol: float = DEFAULT_TOL) -> float:
    """Complete elliptic integral of the second kind, modulus k in [0, 1]."""
    if not 0.0 <= k <= 1.0:
        raise ValueError(f"elliptic_e needs 0 <= k <= 1, got {k!r}")
    if k == 1.0:
        return 1.0
    kp2 = 1.0 - k * k
    return 0.5 * math.pi * magm(1.0, kp2, tol).value / agm(1.0, math.sqrt(kp2), tol).value
