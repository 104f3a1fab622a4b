"""Bivariate polynomials over Q and the graded monomial enumeration.

Monomials are enumerated by total degree first; inside one degree ``y`` is
senior to ``x`` and the listing runs from the most senior monomial down::

    m_1 = 1, m_2 = y, m_3 = x, m_4 = y^2, m_5 = x*y, m_6 = x^2, m_7 = y^3, ...

The same seniority defines the monomial order used for leading terms,
exact division and rendering. With the opposite seniority the sign of
some Lagutinski determinants flips (e.g. the order-3 determinant of
``x d/dx - y d/dy`` would read ``2*x*y`` instead of ``-2*x*y``).
"""
from __future__ import annotations

import heapq
import math
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Tuple

__all__ = [
    "Monomial",
    "Polynomial",
    "InexactDivisionError",
    "NEG_INF",
    "monomial_at",
    "monomial_index",
    "index_bound",
    "gcd",
    "gcd_prs",
    "X",
    "Y",
    "ONE",
    "ZERO",
]

NEG_INF = float("-inf")

Key = Tuple[int, int]


class InexactDivisionError(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


class Monomial(NamedTuple):
    ex: int
    ey: int

    @property
    def degree(self) -> int:
        return self.ex + self.ey

    def __str__(self) -> str:
        return _render_monomial(self) or "1"


def monomial_at(k: int) -> Monomial:
    """The k-th monomial (1-based) of the graded enumeration."""
    if k < 1:
        raise ValueError(f"monomial index must be positive, got {k}")
    # largest d with d(d+1)/2 < k
    d = (math.isqrt(8 * (k - 1) + 1) - 1) // 2
    pos = k - 1 - d * (d + 1) // 2
    return Monomial(pos, d - pos)


def monomial_index(m: Tuple[int, int]) -> int:
    ex, ey = m
    if ex < 0 or ey < 0:
        raise ValueError(f"negative exponent in {m}")
    d = ex + ey
    return d * (d + 1) // 2 + ex + 1


def index_bound(d: int) -> int:
    """Index of the last monomial of total degree d: (d+1)(d+2)/2."""
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    return (d + 1) * (d + 2) // 2


def _seniority(m: Key) -> Tuple[int, int]:
    # larger is more senior
    return (m[0] + m[1], m[1])


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _render_monomial(m: Key) -> str:
    parts = []
    for name, e in (("x", m[0]), ("y", m[1])):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable element of Q[x, y], stored as a sparse term map.

    Coefficients are ints when integral and Fractions otherwise; zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Key, object]] = None):
        clean: Dict[Key, object] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    ex, ey = m
                    if ex < 0 or ey < 0:
                        raise ValueError(f"negative exponent in {m}")
                    if isinstance(c, float):
                        raise TypeError("polynomial coefficients must be exact")
                    clean[(ex, ey)] = _norm_coeff(Fraction(c) if not isinstance(c, int) else c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Key, object]) -> "Polynomial":
        # trusted constructor: caller guarantees nonzero normalized coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, m: Tuple[int, int], c=1) -> "Polynomial":
        return cls({(m[0], m[1]): c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Key, object]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, object]]:
        """Terms in descending seniority (the rendering order)."""
        for m in sorted(self._terms, key=_seniority, reverse=True):
            yield Monomial(*m), self._terms[m]

    def coeff(self, m: Tuple[int, int]):
        return self._terms.get((m[0], m[1]), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    @property
    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(ex + ey for ex, ey in self._terms)

    def degree_in(self, var: str) -> int:
        i = _var_slot(var)
        if not self._terms:
            return -1
        return max(m[i] for m in self._terms)

    def leading_term(self) -> Tuple[Monomial, object]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=_seniority)
        return Monomial(*m), self._terms[m]

    def leading_coeff(self):
        return self.leading_term()[1]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm_coeff(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = _norm_coeff(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Polynomial":
        if not c:
            return ZERO
        return Polynomial._raw({m: _norm_coeff(v * c) for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) * len(b) >= _KRONECKER_MIN and _all_int(a) and _all_int(b):
            return Polynomial._raw(_kron_mul(a, b))
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Key, object] = {}
        get = out.get
        for (bx, by), bc in b.items():
            for (ax, ay), ac in a.items():
                k = (ax + bx, ay + by)
                out[k] = get(k, 0) + ac * bc
        return Polynomial._raw({m: _norm_coeff(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(Fraction(1) / other)
        if isinstance(other, Polynomial):
            return self.exact_div(other)
        return NotImplemented

    def divmod(self, b: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Multivariate division by a single divisor in the graded order.

        Returns ``(q, r)`` with ``self = q*b + r`` where no term of ``r`` is
        divisible by the leading monomial of ``b``.
        """
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        (lx, ly), lc = b.leading_term()
        inv = Fraction(1, 1) / lc
        rem = dict(self._terms)
        quot: Dict[Key, object] = {}
        out_rem: Dict[Key, object] = {}
        bterms = list(b._terms.items())
        while rem:
            m = max(rem, key=_seniority)
            c = rem.pop(m)
            if m[0] < lx or m[1] < ly:
                out_rem[m] = c
                continue
            qm = (m[0] - lx, m[1] - ly)
            qc = _norm_coeff(c * inv)
            quot[qm] = qc
            for (bx, by), bc in bterms:
                if (bx, by) == (lx, ly):
                    continue
                k = (bx + qm[0], by + qm[1])
                s = rem.get(k, 0) - qc * bc
                if s:
                    rem[k] = _norm_coeff(s)
                else:
                    rem.pop(k, None)
        return Polynomial._raw(quot), Polynomial._raw(out_rem)

    def exact_div(self, b: "Polynomial") -> "Polynomial":
        """Quotient ``q`` with ``q*b == self``; raises if ``b`` does not divide."""
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return ZERO
        (lx, ly), lc = b.leading_term()
        if len(b._terms) == 1:
            return self._div_monomial(lx, ly, lc)
        if len(self._terms) >= _KRONECKER_MIN // 4 and _all_int(self._terms) and _all_int(b._terms):
            q = _kron_exact_div(self._terms, b._terms)
            if q is not None:
                return q
        inv = Fraction(1, 1) / lc
        rem = dict(self._terms)
        quot: Dict[Key, object] = {}
        bterms = [(m, c) for m, c in b._terms.items() if m != (lx, ly)]
        # max-heap on seniority; stale keys are skipped when popped
        heap = [(-(ex + ey), -ey, ex) for ex, ey in rem]
        heapq.heapify(heap)
        pop, push = heapq.heappop, heapq.heappush
        while heap:
            nd, ney, ex = pop(heap)
            m = (ex, -ney)
            c = rem.pop(m, 0)
            if not c:
                continue
            if m[0] < lx or m[1] < ly:
                raise InexactDivisionError(f"{b} does not divide {self}")
            qx, qy = m[0] - lx, m[1] - ly
            qc = c * inv
            if isinstance(qc, Fraction) and qc.denominator == 1:
                qc = qc.numerator
            quot[(qx, qy)] = qc
            for (bx, by), bc in bterms:
                k = (bx + qx, by + qy)
                old = rem.get(k, 0)
                s = old - qc * bc
                if s:
                    rem[k] = s
                    if not old:
                        push(heap, (-(k[0] + k[1]), -k[1], k[0]))
                elif old:
                    del rem[k]
        return Polynomial._raw(quot)

    def _div_monomial(self, lx: int, ly: int, lc) -> "Polynomial":
        inv = Fraction(1, 1) / lc
        out: Dict[Key, object] = {}
        for (ex, ey), c in self._terms.items():
            if ex < lx or ey < ly:
                raise InexactDivisionError(f"monomial division of {self} is inexact")
            out[(ex - lx, ey - ly)] = _norm_coeff(c * inv)
        return Polynomial._raw(out)

    def partial(self, var: str) -> "Polynomial":
        i = _var_slot(var)
        out: Dict[Key, object] = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                k = (m[0] - 1, m[1]) if i == 0 else (m[0], m[1] - 1)
                out[k] = c * e
        return Polynomial._raw(out)

    def eval(self, x0, y0):
        """Exact value at (x0, y0) for rational arguments."""
        x0, y0 = Fraction(x0), Fraction(y0)
        total = Fraction(0)
        for (ex, ey), c in self._terms.items():
            total += c * x0**ex * y0**ey
        return _norm_coeff(total)

    def eval_float(self, x0: float, y0: float) -> float:
        return float(sum(float(c) * x0**ex * y0**ey for (ex, ey), c in self._terms.items()))

    # -- content ----------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        vals = [Fraction(c) for c in self._terms.values()]
        den = reduce(math.lcm, (v.denominator for v in vals), 1)
        num = reduce(math.gcd, (v.numerator * (den // v.denominator) for v in vals), 0)
        return Fraction(num, den)

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(Fraction(1) / self.leading_coeff())

    def integer_primitive(self) -> Tuple[Fraction, Dict[Key, int]]:
        """Split into (c, P) with self = c*P, P integral with coprime coefficients
        and positive leading coefficient."""
        c = self.content()
        if self.leading_coeff() < 0:
            c = -c
        return c, {m: int(Fraction(v) / c) for m, v in self._terms.items()}

    # -- comparison / rendering -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {(0, 0): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.items()):
            mono = _render_monomial(m)
            neg = c < 0
            a = -c if neg else c
            if mono:
                if a == 1:
                    body = mono
                else:
                    body = f"{_render_coeff(a)}*{mono}"
            else:
                body = _render_coeff(a)
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _render_coeff(a) -> str:
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


# -- Kronecker substitution ---------------------------------------------------
#
# Integer polynomials are packed into one big integer by x -> B^S, y -> B with
# B = 256**kb, so that Python's C-level big-integer multiplication and division
# do the work. Slot widths come from explicit coefficient bounds; quotients are
# checked by an exact re-multiplication.

_KRONECKER_MIN = 512


def _all_int(terms: Mapping) -> bool:
    return all(type(c) is int for c in terms.values())


def _kron_pack(terms: Mapping[Key, int], S: int, kb: int) -> int:
    dx = max(m[0] for m in terms)
    size = (dx + 1) * S * kb
    pos = bytearray(size)
    neg = bytearray(size)
    for (ex, ey), c in terms.items():
        off = (ex * S + ey) * kb
        if c > 0:
            pos[off:off + kb] = c.to_bytes(kb, "little")
        else:
            neg[off:off + kb] = (-c).to_bytes(kb, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kron_unpack(value: int, S: int, kb: int, nslots: int) -> Optional[Dict[Key, int]]:
    half = 1 << (8 * kb - 1)
    zero_slot = b"\x00" * (kb - 1) + b"\x80"
    v = value + int.from_bytes(zero_slot * nslots, "little")
    if v < 0 or v.bit_length() > 8 * kb * nslots:
        return None
    buf = memoryview(v.to_bytes(nslots * kb, "little"))
    out: Dict[Key, int] = {}
    from_bytes = int.from_bytes
    off = 0
    for ex in range(nslots // S):
        for ey in range(S):
            chunk = buf[off:off + kb]
            off += kb
            if chunk != zero_slot:
                out[(ex, ey)] = from_bytes(chunk, "little") - half
    return out


def _kron_mul(a: Mapping[Key, int], b: Mapping[Key, int]) -> Dict[Key, int]:
    bound = min(len(a), len(b)) * max(map(abs, a.values())) * max(map(abs, b.values()))
    kb = (bound.bit_length() + 2 + 7) // 8
    S = max(m[1] for m in a) + max(m[1] for m in b) + 1
    dx = max(m[0] for m in a) + max(m[0] for m in b)
    prod = _kron_pack(a, S, kb) * _kron_pack(b, S, kb)
    out = _kron_unpack(prod, S, kb, (dx + 1) * S)
    assert out is not None, "Kronecker slot width too small"
    return out


def _kron_exact_div(a: Mapping[Key, int], b: Mapping[Key, int]) -> Optional["Polynomial"]:
    """a / b for integer a, b, or None to request the generic division."""
    cb = reduce(math.gcd, b.values(), 0)
    bp = {m: c // cb for m, c in b.items()}
    dya = max(m[1] for m in a)
    dxa = max(m[0] for m in a)
    dxb = max(m[0] for m in bp)
    if max(m[1] for m in bp) > dya or dxb > dxa:
        return None
    S = dya + 1
    bits = max(map(abs, a.values())).bit_length() + len(a).bit_length() + 64
    kb = (bits + 7) // 8
    kb = max(kb, (max(map(abs, bp.values())).bit_length() + 8) // 8)
    q_int, r = divmod(_kron_pack(a, S, kb), _kron_pack(bp, S, kb))
    if r:
        return None
    q = _kron_unpack(q_int, S, kb, (dxa - dxb + 1) * S)
    if not q or _kron_mul(q, bp) != dict(a):
        return None
    if cb != 1:
        return Polynomial._raw({m: _norm_coeff(Fraction(c, cb)) for m, c in q.items()})
    return Polynomial._raw(q)


def _var_slot(var: str) -> int:
    if var == "x":
        return 0
    if var == "y":
        return 1
    raise ValueError(f"unknown variable {var!r}; expected 'x' or 'y'")


ZERO = Polynomial._raw({})
ONE = Polynomial._raw({(0, 0): 1})
X = Polynomial._raw({(1, 0): 1})
Y = Polynomial._raw({(0, 1): 1})


# ---------------------------------------------------------------------------
# gcd
#
# Heuristic gcd (evaluate at a large integer, take the integer gcd, rebuild the
# polynomial from its balanced xi-adic digits, confirm by trial division) on
# integer images, with a primitive PRS in y over Q[x] as the fallback.

_HEU_ATTEMPTS = 8


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor in Q[x, y]; gcd(0, 0) = 0."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return ONE
    _, fa = a.integer_primitive()
    _, fb = b.integer_primitive()
    h = _heu_gcd2(fa, fb)
    if h is None:
        return gcd_prs(a, b)
    return Polynomial(h).monic()


def _max_norm(f: Mapping) -> int:
    return max(abs(c) for c in f.values())


def _initial_xi(f: Mapping, g: Mapping, lc_f: int, lc_g: int) -> int:
    b = min(_max_norm(f), _max_norm(g))
    return max(
        min(2 * b, 99 * math.isqrt(b) + 99),
        2 * min(_max_norm(f) // abs(lc_f), _max_norm(g) // abs(lc_g)) + 4,
    )


def _balanced_digits(n: int, xi: int) -> Iterator[int]:
    half = xi // 2
    while n:
        d = n % xi
        if d > half:
            d -= xi
        yield d
        n = (n - d) // xi


def _prim_int(f: Dict) -> Dict:
    g = reduce(math.gcd, f.values(), 0)
    lead = f[max(f)] if f else 1
    if lead < 0:
        g = -g
    return {k: v // g for k, v in f.items()}


def _udivides(f: Dict[int, int], h: Dict[int, int]) -> bool:
    """Does h divide f in Z[x]? (dicts exponent -> int)"""
    rem = dict(f)
    dh = max(h)
    lh = h[dh]
    while rem:
        d = max(rem)
        if d < dh:
            return False
        c = rem[d]
        if c % lh:
            return False
        q = c // lh
        for e, hc in h.items():
            k = e + d - dh
            s = rem.get(k, 0) - q * hc
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return True


def _heu_gcd1(f: Dict[int, int], g: Dict[int, int]) -> Optional[Dict[int, int]]:
    """gcd in Z[x] including the gcd of the integer contents."""
    if not f or not g:
        return None
    cf = reduce(math.gcd, f.values(), 0)
    cg = reduce(math.gcd, g.values(), 0)
    cont = math.gcd(cf, cg)
    f = {k: v // cf for k, v in f.items()}
    g = {k: v // cg for k, v in g.items()}
    df, dg = max(f), max(g)
    if df == 0 or dg == 0:
        return {0: cont}
    xi = _initial_xi(f, g, f[df], g[dg])
    for _ in range(_HEU_ATTEMPTS):
        fv = sum(c * xi**e for e, c in f.items())
        gv = sum(c * xi**e for e, c in g.items())
        if fv and gv:
            hv = math.gcd(fv, gv)
            h = {e: d for e, d in enumerate(_balanced_digits(hv, xi)) if d}
            if h:
                h = _prim_int(h)
                if _udivides(f, h) and _udivides(g, h):
                    return {k: v * cont for k, v in h.items()}
        xi = xi * 73794 * xi.bit_length() // 27011 + 1
    return None


def _heu_gcd2(f: Dict[Key, int], g: Dict[Key, int]) -> Optional[Dict[Key, int]]:
    """Heuristic gcd of two primitive integer bivariate polynomials."""
    lc_f = f[max(f, key=_seniority)]
    lc_g = g[max(g, key=_seniority)]
    xi = _initial_xi(f, g, lc_f, lc_g)
    pf, pg = Polynomial(f), Polynomial(g)
    for _ in range(_HEU_ATTEMPTS):
        fx: Dict[int, int] = {}
        for (ex, ey), c in f.items():
            fx[ex] = fx.get(ex, 0) + c * xi**ey
        gx: Dict[int, int] = {}
        for (ex, ey), c in g.items():
            gx[ex] = gx.get(ex, 0) + c * xi**ey
        fx = {k: v for k, v in fx.items() if v}
        gx = {k: v for k, v in gx.items() if v}
        hx = _heu_gcd1(fx, gx) if fx and gx else None
        if hx is not None:
            h: Dict[Key, int] = {}
            for ex, c in hx.items():
                for ey, d in enumerate(_balanced_digits(c, xi)):
                    if d:
                        h[(ex, ey)] = d
            if h:
                hp = Polynomial(h)
                hp = hp.scale(Fraction(1, 1) / hp.content())
                try:
                    pf.exact_div(hp)
                    pg.exact_div(hp)
                    return hp._terms
                except InexactDivisionError:
                    pass
        xi = xi * 73794 * xi.bit_length() // 27011 + 1
    return None


# -- fallback: primitive PRS in y over Q[x] ----------------------------------


def _ucoeffs_in_y(a: Polynomial) -> Dict[int, Polynomial]:
    out: Dict[int, Dict[Key, object]] = {}
    for (ex, ey), c in a._terms.items():
        out.setdefault(ey, {})[(ex, 0)] = c
    return {k: Polynomial._raw(v) for k, v in out.items()}


def _gcd_x(a: Polynomial, b: Polynomial) -> Polynomial:
    # Euclid for polynomials in x alone
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic() if not a.is_zero() else a


def _content_y(a: Polynomial) -> Polynomial:
    return reduce(_gcd_x, _ucoeffs_in_y(a).values(), ZERO)


def _prem_y(a: Polynomial, b: Polynomial) -> Polynomial:
    db = b.degree_in("y")
    lcb = _ucoeffs_in_y(b)[db]
    r = a
    while not r.is_zero() and r.degree_in("y") >= db:
        dr = r.degree_in("y")
        lcr = _ucoeffs_in_y(r)[dr]
        r = r * lcb - lcr * Polynomial.monomial((0, dr - db)) * b
    return r


def gcd_prs(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by primitive polynomial remainder sequences (slow, robust)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    ca, cb = _content_y(a), _content_y(b)
    c = _gcd_x(ca, cb)
    f, g = a.exact_div(ca), b.exact_div(cb)
    if f.degree_in("y") < g.degree_in("y"):
        f, g = g, f
    while not g.is_zero() and g.degree_in("y") > 0:
        r = _prem_y(f, g)
        f = g
        g = r.exact_div(_content_y(r)) if not r.is_zero() else r
    if g.is_zero():
        h = f.exact_div(_content_y(f))
    else:
        h = ONE  # a nonzero remainder free of y: primitive parts are coprime
    return (c * h).monic()


def lcm_many(polys: Iterable[Polynomial]) -> Polynomial:
    out = ONE
    for p in polys:
        out = (out * p).exact_div(gcd(out, p))
    return out.monic()
