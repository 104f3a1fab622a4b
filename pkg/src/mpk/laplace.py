"""Rule-based Laplace transforms on the exponential-polynomial grammar.

Functions of t are collected into a real basis of terms

    t^n e^(a t) cos(b t),   t^n e^(a t) sin(b t),   b >= 0,

and transformed with L[t^n e^((a + ib) t)] = n! / (s - a - ib)^(n+1).
Transforms are univariate rational functions in s; coefficient lists are
ascending and hold Fractions when everything is exact, floats otherwise.

The inverse splits the denominator into squarefree parts, extracts rational
roots exactly, solves leftover quadratics in closed form and hands anything
else to a numeric eigenvalue root finder. Residues come from Taylor
expansion at each pole. Every pole carries a provenance tag.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from .exact import render_rational
from .expr import Add, Call, Const, Expr, Mul, Neg, Pow, Reciprocal, Var, parse, render

__all__ = [
    "Term",
    "Pole",
    "LaplaceRational",
    "InverseResult",
    "UnsupportedExpressionError",
    "collect_terms",
    "terms_to_expr",
    "laplace_transform",
    "laplace_of_terms",
    "inverse_laplace_terms",
    "inverse_laplace_transform",
    "parse_laplace_rational",
    "MAX_MULTIPLICITY",
]

Number = Union[int, Fraction, float]
Coeffs = Tuple[Number, ...]

MAX_MULTIPLICITY = 4
_ROOT_SNAP_DEN = 10**6
_COEFF_SNAP_DEN = 10**6


class UnsupportedExpressionError(ValueError):
    pass


class Term(NamedTuple):
    """t^n e^(a t) cos(b t) when kind == "cos", sin(b t) when "sin"; b >= 0."""

    n: int
    a: Number
    b: Number
    kind: str


@dataclass(frozen=True)
class Pole:
    # a real root, or (re, im) with im > 0 standing for a conjugate pair
    value: Union[Fraction, float, Tuple[Number, Number]]
    multiplicity: int
    provenance: str  # "exact" | "quadratic" | "numeric"


# -- univariate polynomial helpers (ascending coefficient tuples) -------------


def _is_exact(c) -> bool:
    return isinstance(c, (int, Fraction))


def _trim(p) -> Coeffs:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p: Sequence, q: Sequence) -> Coeffs:
    n = max(len(p), len(q))
    return _trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def _pscale(p: Sequence, c) -> Coeffs:
    return _trim(c * a for a in p)


def _pmul(p: Sequence, q: Sequence) -> Coeffs:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _ppow(p: Sequence, k: int) -> Coeffs:
    out: Coeffs = (1,)
    for _ in range(k):
        out = _pmul(out, p)
    return out


def _pdivmod(p: Sequence, q: Sequence) -> Tuple[Coeffs, Coeffs]:
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quo = [0] * max(len(r) - dq, 1)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq]
        if c == 0:
            continue
        c = Fraction(c) / lead if _is_exact(c) and _is_exact(lead) else c / lead
        quo[k] = c
        for j in range(dq + 1):
            r[k + j] -= c * q[j]
        r[k + dq] = 0
    return _trim(quo), _trim(r[:dq])


def _pgcd(p: Sequence, q: Sequence) -> Coeffs:
    """Monic gcd over Q (exact coefficients only)."""
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, _pdivmod(p, q)[1]
    return _monic(p) if p else ()


def _monic(p: Sequence) -> Coeffs:
    lead = p[-1]
    if lead == 1:
        return tuple(p)
    if all(_is_exact(c) for c in p) and _is_exact(lead):
        return tuple(_norm(Fraction(c) / lead) for c in p)
    return tuple(c / lead for c in p)


def _pderiv(p: Sequence) -> Coeffs:
    return _trim(k * p[k] for k in range(1, len(p)))


def _peval(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _taylor_shift(p: Sequence, r) -> List:
    """Coefficients of p(r + h) in powers of h."""
    c = list(p)
    n = len(c)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            c[j] += r * c[j + 1]
    return c


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _exact_all(p: Sequence) -> bool:
    return all(_is_exact(c) for c in p)


def _render_coeff(c) -> str:
    if isinstance(c, float):
        return repr(c)
    return render_rational(Fraction(c))


def _render_upoly(p: Coeffs, var: str) -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = _render_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_render_coeff(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"{'-' if neg else '+'} {body}")
    return " ".join(parts)


# -- the transform value ---------------------------------------------------------


class LaplaceRational:
    """num/den in s with a monic denominator, reduced when coefficients are exact."""

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence[Number], den: Sequence[Number] = (1,)):
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("Laplace rational with zero denominator")
        if not num:
            den = (1,)
        elif _exact_all(num) and _exact_all(den):
            g = _pgcd(num, den)
            if len(g) > 1:
                num, den = _pdivmod(num, g)[0], _pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = _pscale(num, (Fraction(1) / lead) if _is_exact(lead) else 1.0 / lead)
            den = _monic(den)
        self.num: Coeffs = tuple(_norm(c) for c in num)
        self.den: Coeffs = tuple(_norm(c) for c in den)

    @property
    def exact(self) -> bool:
        return _exact_all(self.num) and _exact_all(self.den)

    def is_proper(self) -> bool:
        return len(self.num) < len(self.den)

    def __call__(self, s):
        return _peval(self.num, s) / _peval(self.den, s)

    def __add__(self, other: "LaplaceRational") -> "LaplaceRational":
        other = _as_lr(other)
        return LaplaceRational(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self) -> "LaplaceRational":
        return LaplaceRational(_pscale(self.num, -1), self.den)

    def __sub__(self, other) -> "LaplaceRational":
        return self + (-_as_lr(other))

    def __mul__(self, other) -> "LaplaceRational":
        other = _as_lr(other)
        return LaplaceRational(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LaplaceRational":
        other = _as_lr(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero transform")
        return LaplaceRational(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, float)):
            other = LaplaceRational((other,))
        if not isinstance(other, LaplaceRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def render(self, var: str = "s") -> str:
        num = _render_upoly(self.num, var)
        if self.den == (1,):
            return num
        if len([c for c in self.num if c != 0]) > 1 or (self.num and self.num[-1] < 0 and len(self.num) > 1):
            num = f"({num})"
        den = _render_upoly(self.den, var)
        if len([c for c in self.den if c != 0]) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaplaceRational({self.render()!r})"


def _as_lr(v) -> LaplaceRational:
    if isinstance(v, LaplaceRational):
        return v
    if isinstance(v, (int, Fraction, float)):
        return LaplaceRational((v,))
    raise TypeError(f"cannot use {v!r} as a transform")


# -- collecting an expression into the basis ------------------------------------

TermDict = Dict[Term, Number]

_ONE_TERM = Term(0, 0, 0, "cos")


def _add_into(acc: TermDict, key: Term, c) -> None:
    v = acc.get(key, 0) + c
    if v == 0:
        acc.pop(key, None)
    else:
        acc[key] = v


def _key(n: int, a, b, kind: str, c) -> Tuple[Term, Number]:
    """Normalise b >= 0 and drop sin(0 t)."""
    if b < 0:
        b = -b
        if kind == "sin":
            c = -c
    if b == 0:
        if kind == "sin":
            return None, 0
        b = 0
    return Term(n, _norm(a), _norm(b), kind), c


def _mul_terms(s: TermDict, t: TermDict) -> TermDict:
    out: TermDict = {}
    for k1, c1 in s.items():
        for k2, c2 in t.items():
            n, a = k1.n + k2.n, k1.a + k2.a
            c = c1 * c2
            half = Fraction(1, 2) if _is_exact(c) else 0.5
            bp, bm = k1.b + k2.b, k1.b - k2.b
            if k1.kind == "cos" and k2.kind == "cos":
                pieces = ((bm, "cos", half), (bp, "cos", half))
            elif k1.kind == "sin" and k2.kind == "sin":
                pieces = ((bm, "cos", half), (bp, "cos", -half))
            elif k1.kind == "sin":
                pieces = ((bp, "sin", half), (bm, "sin", half))
            else:
                # cos(B1) sin(B2) = (sin(B1 + B2) - sin(B1 - B2)) / 2
                pieces = ((bp, "sin", half), (bm, "sin", -half))
            for b, kind, w in pieces:
                key, cc = _key(n, a, b, kind, c * w)
                if key is not None and cc != 0:
                    _add_into(out, key, cc)
    return out


def _constant_of(d: TermDict, node: Expr):
    if not d:
        return 0
    if set(d) != {_ONE_TERM}:
        raise UnsupportedExpressionError(f"expected a constant, got {render(node)}")
    return d[_ONE_TERM]


def _linear_of(d: TermDict, node: Expr, var: str):
    """(alpha, beta) with d = alpha + beta t, or raise."""
    alpha = d.get(_ONE_TERM, 0)
    beta = d.get(Term(1, 0, 0, "cos"), 0)
    if set(d) - {_ONE_TERM, Term(1, 0, 0, "cos")}:
        raise UnsupportedExpressionError(
            f"argument is not linear in {var}: {render(node)}"
        )
    return alpha, beta


def collect_terms(e: Expr, var: str = "t") -> TermDict:
    """Expand e into the exponential-polynomial basis, or raise naming the subterm."""
    if isinstance(e, Const):
        return {_ONE_TERM: e.value} if e.value != 0 else {}
    if isinstance(e, Var):
        if e.name != var:
            raise UnsupportedExpressionError(f"unexpected variable {e.name!r}")
        return {Term(1, 0, 0, "cos"): 1}
    if isinstance(e, Add):
        out = dict(collect_terms(e.left, var))
        for k, c in collect_terms(e.right, var).items():
            _add_into(out, k, c)
        return out
    if isinstance(e, Neg):
        return {k: -c for k, c in collect_terms(e.arg, var).items()}
    if isinstance(e, Mul):
        return _mul_terms(collect_terms(e.left, var), collect_terms(e.right, var))
    if isinstance(e, Pow):
        base = collect_terms(e.base, var)
        if e.exponent < 0:
            c = _constant_of(base, e)
            if c == 0:
                raise ZeroDivisionError(f"zero to a negative power in {render(e)}")
            c = (Fraction(1) / c if _is_exact(c) else 1.0 / c) ** (-e.exponent)
            return {_ONE_TERM: _norm(c)}
        out = {_ONE_TERM: 1}
        for _ in range(e.exponent):
            out = _mul_terms(out, base)
        return out
    if isinstance(e, Reciprocal):
        c = _constant_of(collect_terms(e.arg, var), e)
        if c == 0:
            raise ZeroDivisionError(f"division by zero in {render(e)}")
        return {_ONE_TERM: _norm(Fraction(1) / c if _is_exact(c) else 1.0 / c)}
    if isinstance(e, Call):
        inner = collect_terms(e.arg, var)
        if e.name == "sqrt":
            c = _constant_of(inner, e)
            if c < 0:
                raise UnsupportedExpressionError(f"square root of a negative: {render(e)}")
            return {_ONE_TERM: _sqrt(c)} if c != 0 else {}
        alpha, beta = _linear_of(inner, e, var)
        if e.name == "exp":
            scale = 1 if alpha == 0 else math.exp(alpha)
            return {Term(0, _norm(beta), 0, "cos"): scale}
        # sin/cos(alpha + beta t) expanded by the addition formulas
        ca, sa = (1, 0) if alpha == 0 else (math.cos(alpha), math.sin(alpha))
        if e.name == "cos":
            parts = ((beta, "cos", ca), (beta, "sin", -sa))
        else:
            parts = ((beta, "sin", ca), (beta, "cos", sa))
        out: TermDict = {}
        for b, kind, c in parts:
            key, cc = _key(0, 0, b, kind, c)
            if key is not None and cc != 0:
                _add_into(out, key, cc)
        return out
    raise UnsupportedExpressionError(f"unsupported node {e!r}")


def _sqrt(c):
    if _is_exact(c):
        q = Fraction(c)
        rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
        if rn * rn == q.numerator and rd * rd == q.denominator:
            return _norm(Fraction(rn, rd))
    return math.sqrt(c)


def _scaled(c, t: Var) -> Expr:
    if c == 1:
        return t
    if c == -1:
        return Neg(t)
    return Mul(Const(c), t)


def terms_to_expr(terms: TermDict, var: str = "t") -> Expr:
    """Expression tree for a term dictionary, in a fixed order."""
    t = Var(var)
    out: Optional[Expr] = None

    def sort_key(item):
        k, _ = item
        return (float(k.a), float(k.b), k.kind, k.n)

    for k, c in sorted(terms.items(), key=sort_key):
        factors: List[Expr] = []
        if k.n:
            factors.append(t if k.n == 1 else Pow(t, k.n))
        if k.a != 0:
            factors.append(Call("exp", _scaled(k.a, t)))
        if k.b != 0 or k.kind == "sin":
            factors.append(Call(k.kind, _scaled(k.b, t)))
        neg = c < 0
        mag = -c if neg else c
        if mag != 1 or not factors:
            factors.insert(0, Const(mag))
        node = factors[0]
        for f in factors[1:]:
            node = Mul(node, f)
        if out is None:
            out = Neg(node) if neg else node
        else:
            out = Add(out, Neg(node) if neg else node)
    return out if out is not None else Const(0)


# -- forward transform --------------------------------------------------------


def _factor(a, b) -> Coeffs:
    if b == 0:
        return _trim((-a, 1))
    return _trim((a * a + b * b, -2 * a, 1))


def _term_numerator(k: Term) -> Coeffs:
    """n! * Re or Im of (s - a + i b)^(n+1), as a polynomial in s.

    Over the factor ((s - a)^2 + b^2)^(n+1) this is the transform of the term.
    """
    n, a, b = k.n, k.a, k.b
    if b == 0:
        # real pole: the denominator factor is (s - a) rather than a quadratic
        return (math.factorial(n),)
    w = _trim((-a, 1))
    out: Coeffs = ()
    for j in range(n + 2):
        # j-th binomial term carries (i b)^j
        if (j % 2 == 0) != (k.kind == "cos"):
            continue
        sign = -1 if (j // 2) % 2 else 1
        coef = math.comb(n + 1, j) * sign * b**j
        out = _padd(out, _pscale(_ppow(w, n + 1 - j), coef))
    return _pscale(out, math.factorial(n))


def laplace_of_terms(terms: TermDict) -> LaplaceRational:
    if not terms:
        return LaplaceRational(())
    order: Dict[Tuple[Number, Number], int] = {}
    for k in terms:
        order[(k.a, k.b)] = max(order.get((k.a, k.b), 0), k.n + 1)
    den: Coeffs = (1,)
    for (a, b), m in order.items():
        den = _pmul(den, _ppow(_factor(a, b), m))
    num: Coeffs = ()
    for k, c in terms.items():
        rest: Coeffs = (1,)
        for (a, b), m in order.items():
            e = m - (k.n + 1) if (a, b) == (k.a, k.b) else m
            rest = _pmul(rest, _ppow(_factor(a, b), e))
        num = _padd(num, _pscale(_pmul(_term_numerator(k), rest), c))
    return LaplaceRational(num, den)


def laplace_transform(f: Union[Expr, str], var: str = "t") -> LaplaceRational:
    """Transform of f(var) on the exponential-polynomial grammar."""
    if isinstance(f, str):
        f = parse(f, (var,), {"pi": math.pi})
    return laplace_of_terms(collect_terms(f, var))


# -- inverse transform --------------------------------------------------------------


@dataclass(frozen=True)
class InverseResult:
    terms: TermDict
    poles: Tuple[Pole, ...]

    @property
    def expr(self) -> Expr:
        return terms_to_expr(self.terms)


def _integer_primitive(p: Coeffs) -> Coeffs:
    den = 1
    for c in p:
        den = math.lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def _squarefree(p: Coeffs) -> List[Tuple[Coeffs, int]]:
    """Yun's algorithm over Q: [(factor, multiplicity), ...] with monic factors."""
    p = _monic(p)
    out = []
    dp = _pderiv(p)
    a = _pgcd(p, dp)
    b = _pdivmod(p, a)[0]
    c = _pdivmod(dp, a)[0]
    d = _padd(c, _pscale(_pderiv(b), -1))
    i = 1
    while len(b) > 1:
        a = _pgcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = _pdivmod(b, a)[0]
        c = _pdivmod(d, a)[0]
        d = _padd(c, _pscale(_pderiv(b), -1))
        i += 1
    return out


def _numeric_roots(p: Sequence) -> List[complex]:
    if len(p) <= 1:
        return []
    roots = np.roots([complex(c) for c in reversed(p)])
    out = []
    for r in roots:
        r = complex(r)
        # a few Newton steps against the original coefficients
        dp = _pderiv(p)
        for _ in range(3):
            d = _peval(dp, r)
            if d == 0:
                break
            step = _peval(p, r) / d
            r -= step
            if abs(step) <= 1e-16 * max(1.0, abs(r)):
                break
        out.append(r)
    return out


def _quadratic_poles(q: Coeffs, mult: int) -> List[Pole]:
    """Roots of an exact quadratic with no rational root."""
    C, B, A = (Fraction(c) for c in q)
    disc = B * B - 4 * A * C
    if disc < 0:
        return [Pole((_norm(-B / (2 * A)), _sqrt(-disc / (4 * A * A))), mult, "quadratic")]
    sq = math.sqrt(disc)
    # stable pair: avoid cancellation in the smaller root
    r1 = (-float(B) - math.copysign(sq, float(B))) / (2 * float(A))
    r2 = float(C) / (float(A) * r1)
    return [Pole(r1, mult, "quadratic"), Pole(r2, mult, "quadratic")]


def _rational_quadratic(r1: complex, r2: complex, p: Coeffs) -> Optional[Coeffs]:
    """(s - r1)(s - r2) if it has rational coefficients and divides p exactly."""
    sm, pr = r1 + r2, r1 * r2
    scale = max(1.0, abs(r1), abs(r2))
    if abs(sm.imag) > 1e-7 * scale or abs(pr.imag) > 1e-7 * scale * scale:
        return None
    q = (
        Fraction(pr.real).limit_denominator(_ROOT_SNAP_DEN),
        -Fraction(sm.real).limit_denominator(_ROOT_SNAP_DEN),
        Fraction(1),
    )
    return q if not _pdivmod(p, q)[1] else None


def _exact_poles(factor: Coeffs, mult: int) -> List[Pole]:
    """Poles of one exact squarefree factor: rational roots, then rational
    quadratic factors, then whatever is left numerically."""
    poles: List[Pole] = []
    rest = _integer_primitive(factor)
    for r in _numeric_roots(rest):
        if abs(r.imag) > 1e-7 * max(1.0, abs(r)):
            continue
        q = Fraction(r.real).limit_denominator(_ROOT_SNAP_DEN)
        if len(rest) > 1 and _peval(rest, q) == 0:
            poles.append(Pole(_norm(q), mult, "exact"))
            rest = _pdivmod(rest, (-q, 1))[0]
    while len(rest) > 3:
        roots = _numeric_roots(rest)
        # conjugate pairs are the likeliest rational quadratics, so try them first
        pairs = sorted(
            ((i, j) for i in range(len(roots)) for j in range(i + 1, len(roots))),
            key=lambda ij: abs(roots[ij[0]] - roots[ij[1]].conjugate()),
        )
        for i, j in pairs:
            q = _rational_quadratic(roots[i], roots[j], rest)
            if q is not None:
                poles.extend(_quadratic_poles(q, mult))
                rest = _pdivmod(rest, q)[0]
                break
        else:
            break
    deg = len(rest) - 1
    if deg == 1:
        poles.append(Pole(_norm(Fraction(-rest[0]) / rest[1]), mult, "exact"))
    elif deg == 2:
        poles.extend(_quadratic_poles(rest, mult))
    elif deg > 2:
        poles.extend(_numeric_poles(rest, mult))
    return poles


def _numeric_poles(p: Sequence, mult: int = 1) -> List[Pole]:
    roots = _numeric_roots(p)
    poles: List[Pole] = []
    used = [False] * len(roots)
    scale = max(1.0, max((abs(r) for r in roots), default=1.0))
    for i, r in enumerate(roots):
        if used[i]:
            continue
        # cluster nearly equal roots into one multiple pole
        group = [j for j in range(len(roots)) if not used[j] and abs(roots[j] - r) < 1e-5 * scale]
        for j in group:
            used[j] = True
        z = sum(roots[j] for j in group) / len(group)
        m = mult * len(group)
        if abs(z.imag) <= 1e-10 * scale:
            poles.append(Pole(z.real, m, "numeric"))
        elif z.imag > 0:
            poles.append(Pole((z.real, z.imag), m, "numeric"))
    return poles


def _find_poles(den: Coeffs) -> List[Pole]:
    if _exact_all(den):
        poles = []
        for factor, m in _squarefree(den):
            poles.extend(_exact_poles(factor, m))
        return poles
    return _numeric_poles(den)


def _pole_value(p: Pole):
    if isinstance(p.value, tuple):
        a, b = p.value
        return complex(float(a), float(b))
    return p.value


def _series_div(n: List, d: List, order: int) -> List:
    """First `order` coefficients of n/d as power series (d[0] != 0)."""
    out = []
    for k in range(order):
        acc = n[k] if k < len(n) else 0
        for j in range(1, k + 1):
            if j < len(d):
                acc -= d[j] * out[k - j]
        out.append(acc / d[0])
    return out


def _residue_terms(num: Coeffs, den: Coeffs, pole: Pole) -> TermDict:
    r = _pole_value(pole)
    m = pole.multiplicity
    if isinstance(r, (float, complex)) or not (_exact_all(num) and _exact_all(den)):
        if not isinstance(r, complex):
            r = float(r)
        num_c = [complex(c) if isinstance(r, complex) else float(c) for c in num]
        den_c = [complex(c) if isinstance(r, complex) else float(c) for c in den]
    else:
        num_c = [Fraction(c) for c in num]
        den_c = [Fraction(c) for c in den]
    q = den_c
    for _ in range(m):
        q = list(_pdivmod(q, (-r, 1))[0])
    ns = _taylor_shift(num_c, r)
    qs = _taylor_shift(q, r)
    ser = _series_div(ns, qs, m)
    out: TermDict = {}
    for k in range(1, m + 1):
        c = ser[m - k] / math.factorial(k - 1)
        n = k - 1
        if isinstance(pole.value, tuple):
            a, b = pole.value
            re, im = 2 * c.real, -2 * c.imag
            if re != 0:
                _add_into(out, Term(n, a, b, "cos"), re)
            if im != 0:
                _add_into(out, Term(n, a, b, "sin"), im)
        elif c != 0:
            _add_into(out, Term(n, _norm(pole.value), 0, "cos"), _norm(c))
    return out


def _snap(c):
    if not isinstance(c, float):
        return c
    q = Fraction(c).limit_denominator(_COEFF_SNAP_DEN)
    return _norm(q) if abs(float(q) - c) <= 1e-9 * max(1.0, abs(c)) else c


def inverse_laplace_terms(F: LaplaceRational) -> InverseResult:
    """Partial-fraction inverse; the term dictionary plus the poles it used."""
    if not F.is_proper():
        raise UnsupportedExpressionError(
            f"improper transform {F.render()} (a polynomial part is not a function)"
        )
    if not F.num:
        return InverseResult({}, ())
    poles = _find_poles(F.den)
    for p in poles:
        if p.multiplicity > MAX_MULTIPLICITY:
            raise UnsupportedExpressionError(
                f"pole {p.value} has multiplicity {p.multiplicity} > {MAX_MULTIPLICITY}"
            )
    terms: TermDict = {}
    for p in poles:
        for k, c in _residue_terms(F.num, F.den, p).items():
            _add_into(terms, k, c)
    if F.exact and any(isinstance(c, float) for c in terms.values()):
        # rational-looking float residues are kept only if they reproduce F exactly
        snapped = {k: _snap(c) for k, c in terms.items()}
        if all(_is_exact(c) for c in snapped.values()) and all(
            _is_exact(k.a) and _is_exact(k.b) for k in snapped
        ):
            if laplace_of_terms(snapped) == F:
                terms = snapped
    return InverseResult(terms, tuple(poles))


def inverse_laplace_transform(F: Union[LaplaceRational, str], var: str = "t") -> Expr:
    """f(var) with laplace_transform(f) = F."""
    if isinstance(F, str):
        F = parse_laplace_rational(F)
    return terms_to_expr(inverse_laplace_terms(F).terms, var)


# -- parsing rational functions of s ----------------------------------------------


def _to_rational(e: Expr, var: str) -> Tuple[Coeffs, Coeffs]:
    if isinstance(e, Const):
        return ((e.value,) if e.value != 0 else ()), (1,)
    if isinstance(e, Var):
        if e.name != var:
            raise UnsupportedExpressionError(f"unexpected variable {e.name!r}")
        return (0, 1), (1,)
    if isinstance(e, Add):
        (a, b), (c, d) = _to_rational(e.left, var), _to_rational(e.right, var)
        return _padd(_pmul(a, d), _pmul(c, b)), _pmul(b, d)
    if isinstance(e, Neg):
        a, b = _to_rational(e.arg, var)
        return _pscale(a, -1), b
    if isinstance(e, Mul):
        (a, b), (c, d) = _to_rational(e.left, var), _to_rational(e.right, var)
        return _pmul(a, c), _pmul(b, d)
    if isinstance(e, Reciprocal):
        a, b = _to_rational(e.arg, var)
        if not a:
            raise ZeroDivisionError(f"division by zero in {render(e)}")
        return b, a
    if isinstance(e, Pow):
        a, b = _to_rational(e.base, var)
        k = e.exponent
        if k < 0:
            if not a:
                raise ZeroDivisionError(f"zero to a negative power in {render(e)}")
            a, b, k = b, a, -k
        return _ppow(a, k), _ppow(b, k)
    raise UnsupportedExpressionError(f"not a rational function of {var}: {render(e)}")


def parse_laplace_rational(text: str, var: str = "s") -> LaplaceRational:
    """Parse text such as ``"1/(s - 3)"`` into a reduced transform."""
    num, den = _to_rational(parse(text, (var,)), var)
    return LaplaceRational(num, den)
