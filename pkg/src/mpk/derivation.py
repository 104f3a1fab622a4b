"""The derivation D = p d/dx + q d/dy on Q[x, y] and on Q(x, y)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import ONE, ZERO, Polynomial, gcd

__all__ = ["Derivation", "RationalFunction", "apply", "apply_power", "apply_rational", "is_integral"]


class RationalFunction:
    """Reduced quotient num/den with a monic denominator.

    Because the representation is canonical, a rational function is zero
    exactly when its numerator has no terms.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = Polynomial._coerce(num)
        den = Polynomial._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = gcd(num, den)
            if not g.is_constant():
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.leading_coeff()
            if lc != 1:
                inv = Fraction(1) / lc
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree <= 0

    @property
    def degree(self):
        """max(deg num, deg den), the degree bound used by the integral search."""
        return max(self.num.degree, self.den.degree)

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._reduced(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def __eq__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def eval(self, x0, y0):
        return Fraction(self.num.eval(x0, y0)) / Fraction(self.den.eval(x0, y0))

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        num = str(self.num)
        if len(self.num) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den) > 1 or self.den.leading_coeff() != 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def _as_rf(v) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    return RationalFunction(v)


@dataclass(frozen=True)
class Derivation:
    """D = p d/dx + q d/dy with polynomial coefficients."""

    p: Polynomial
    q: Polynomial

    def __call__(self, a):
        if isinstance(a, RationalFunction):
            return apply_rational(self, a)
        return apply(self, a)

    def __str__(self) -> str:
        return f"({self.p})*d/dx + ({self.q})*d/dy"


def apply(D: Derivation, a: Polynomial) -> Polynomial:
    a = Polynomial._coerce(a)
    return D.p * a.partial("x") + D.q * a.partial("y")


def apply_power(D: Derivation, k: int, a: Polynomial) -> Polynomial:
    if k < 0:
        raise ValueError("derivation power must be nonnegative")
    a = Polynomial._coerce(a)
    for _ in range(k):
        if a.is_zero():
            break
        a = apply(D, a)
    return a


def apply_rational(D: Derivation, f: RationalFunction) -> RationalFunction:
    f = _as_rf(f)
    num = apply(D, f.num) * f.den - f.num * apply(D, f.den)
    return RationalFunction(num, f.den * f.den)


def is_integral(D: Derivation, f) -> bool:
    """True when f is non-constant and D f vanishes identically."""
    f = _as_rf(f)
    if f.is_constant():
        return False
    # the quotient-rule numerator vanishing is equivalent to D f = 0
    return (apply(D, f.num) * f.den - f.num * apply(D, f.den)).is_zero()
