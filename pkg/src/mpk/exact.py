"""Exact rational scalars.

The scalar field is :class:`fractions.Fraction`, which already stores values
reduced with a positive denominator (so ``0`` is always ``0/1``). This module
adds the rendering, parsing and integer combinatorics the rest of the package
needs on top of it.
"""
from __future__ import annotations

import math
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from numbers import Rational

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "as_rational",
    "factorial",
    "binom",
    "render_rational",
    "render_decimal",
    "parse_rational",
]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and decimal strings to a Fraction.

    Floats are converted exactly (their binary value), never rounded.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


def binom(n: int, k: int) -> int:
    """Binomial coefficient n choose k for 0 <= k <= n."""
    if n < 0 or k < 0:
        raise ValueError(f"binom({n}, {k}): arguments must be nonnegative")
    if k > n:
        raise ValueError(f"binom({n}, {k}): k exceeds n")
    return math.comb(n, k)


def render_rational(a: Fraction) -> str:
    """``p/q`` for non-integers, a plain integer otherwise."""
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def render_decimal(value, digits: int) -> str:
    """Fixed-point rendering with ``digits`` places, ties to even.

    ``value`` may be a Fraction, int or float; floats are rounded from their
    exact binary value.
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
    q = Fraction(value)
    scaled = round(q * 10**digits)  # Fraction.__round__ is half-to-even
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-3/4"``, ``"0.25"`` or ``"1e-3"`` exactly."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise ValueError(f"malformed rational literal {text!r}") from None
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(n, d)
    try:
        dec = Decimal(s)
    except InvalidOperation:
        raise ValueError(f"malformed rational literal {text!r}") from None
    if not dec.is_finite():
        raise ValueError(f"non-finite literal {text!r}")
    return Fraction(dec)
