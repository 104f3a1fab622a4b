"""Lagutinski determinants and rational first integrals of planar derivations.

Row ``i`` (0-based) of the Lagutinski matrix holds ``D^i`` applied to the
monomials ``m_1, m_2, ...`` of the graded enumeration in :mod:`mpk.poly`.
Its leading principal minor of order ``N = (d+1)(d+2)/2`` vanishes exactly
when ``D`` has a rational integral with numerator and denominator of degree
at most ``d``.

Recovery of an integral rests on the Wronskian structure of the matrix: if
``n`` is the smallest order whose leading minor vanishes, then
``m_1, ..., m_n`` satisfy a single linear relation whose coefficients are
constants of ``D``. The coefficients are, up to a common factor, the signed
maximal minors of the first ``n - 1`` rows restricted to the first ``n``
columns, so every non-constant ratio between two of them is an integral.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as gcd_int, lcm as lcm_int
from typing import List, Optional, Sequence, Tuple

from .derivation import Derivation, RationalFunction, apply, is_integral
from .poly import ONE, ZERO, Polynomial, gcd, index_bound, monomial_at

__all__ = [
    "LagutinskiMatrix",
    "IntegralReport",
    "build_matrix",
    "bareiss_det",
    "cofactor_det",
    "detL",
    "leading_minors",
    "decide_integral",
    "find_rational_integral",
    "derivation_from_integral",
]

log = logging.getLogger(__name__)

Matrix = List[List[Polynomial]]


@dataclass(frozen=True)
class LagutinskiMatrix:
    order: int
    entries: Tuple[Tuple[Polynomial, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class IntegralReport:
    exists: bool
    degree_bound: int
    determinant: Polynomial
    integral: Optional[RationalFunction] = None
    # smallest order whose leading minor vanishes, when recovery looked for it
    vanishing_order: Optional[int] = None


def build_matrix(D: Derivation, n: int) -> LagutinskiMatrix:
    if n < 1:
        raise ValueError(f"matrix order must be positive, got {n}")
    cols = []
    for k in range(1, n + 1):
        m = monomial_at(k)
        col = [Polynomial.monomial(m)]
        for _ in range(n - 1):
            prev = col[-1]
            col.append(apply(D, prev) if prev else ZERO)
        cols.append(col)
    entries = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return LagutinskiMatrix(n, entries)


def bareiss_det(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant over Q[x, y] by fraction-free elimination.

    The pivot in each column is the nonzero entry of least total degree
    (ties: fewest terms, then lowest row). Every division is exact.
    """
    n = len(rows)
    if n == 0:
        return ONE
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    M, scale = _integer_rows(rows)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        candidates = [i for i in range(k, n) if M[i][k]]
        if not candidates:
            return ZERO
        piv = min(candidates, key=lambda i: (M[i][k].degree, len(M[i][k]), i))
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        pk = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                val = rowi[j] * pk
                if mik and rowk[j]:
                    val = val - mik * rowk[j]
                rowi[j] = val.exact_div(prev) if prev is not ONE else val
            rowi[k] = ZERO
        prev = pk
    det = M[n - 1][n - 1]
    if scale != 1:
        det = det.scale(1 / scale)
    return -det if sign < 0 else det


def _integer_rows(rows: Sequence[Sequence[Polynomial]]) -> Tuple[Matrix, Fraction]:
    """Scale each row to integer coefficients; returns the rows and the
    product of the scale factors (the factor picked up by the determinant)."""
    out = []
    total = Fraction(1)
    for r in rows:
        den = 1
        for p in r:
            for c in p._terms.values():
                if type(c) is not int:
                    den = lcm_int(den, c.denominator)
        if den != 1:
            r = [p.scale(den) for p in r]
            total *= den
        out.append(list(r))
    return out, total


def cofactor_det(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by Laplace expansion along the first row (exponential; small n only)."""
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [r[:j] + r[j + 1:] for r in (list(row) for row in rows[1:])]
        term = a * cofactor_det(minor)
        total = total - term if j % 2 else total + term
    return total


def detL(D: Derivation, n: int) -> Polynomial:
    """Lagutinski determinant of order n."""
    return bareiss_det(build_matrix(D, n).rows())


def _echelon_until_zero(M: Matrix) -> int:
    """Unpivoted fraction-free elimination in place.

    After step k the diagonal entry M[k+1][k+1] is the leading minor of
    order k+2. Stops at the first vanishing diagonal entry and returns the
    number of nonzero leading minors found before it (or the full order).
    """
    n = len(M)
    prev = ONE
    for k in range(n - 1):
        pk = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                val = rowi[j] * pk
                if mik and rowk[j]:
                    val = val - mik * rowk[j]
                rowi[j] = val.exact_div(prev) if prev is not ONE else val
            rowi[k] = ZERO
        prev = pk
        if M[k + 1][k + 1].is_zero():
            return k + 1
    return n


def leading_minors(D: Derivation, n: int) -> List[Polynomial]:
    """detL(D, 1), ..., detL(D, k) where k <= n stops at the first zero."""
    M = build_matrix(D, n).rows()
    k = _echelon_until_zero(M)
    return [M[i][i] for i in range(min(k + 1, n))]


def decide_integral(D: Derivation, d: int) -> IntegralReport:
    """Existence of a rational integral of degree <= d, without recovery."""
    if d < 1:
        raise ValueError(f"degree bound must be positive, got {d}")
    det = detL(D, index_bound(d))
    return IntegralReport(exists=det.is_zero(), degree_bound=d, determinant=det)


def _kernel_from_echelon(U: Matrix, n0: int) -> List[Polynomial]:
    """Polynomial kernel vector of the first n0 columns of the echelon rows.

    Rows 0..n0-2 of U are fraction-free echelon rows with nonzero pivots.
    The solution normalised by c[n0-1] = U[n0-2][n0-2] consists of signed
    maximal minors, so every division below is exact.
    """
    r = n0 - 1
    c: List[Polynomial] = [ZERO] * n0
    c[r] = U[r - 1][r - 1]
    for i in range(r - 1, -1, -1):
        acc = ZERO
        for j in range(i + 1, n0):
            if U[i][j] and c[j]:
                acc = acc + U[i][j] * c[j]
        c[i] = (-acc).exact_div(U[i][i]) if acc else ZERO
    return c


def _candidates(vec: Sequence[Polynomial]):
    """Non-constant reduced ratios of kernel entries, normalised by the last."""
    content = None
    for v in vec:
        if v:
            cv = v.content()
            content = cv if content is None else Fraction(
                gcd_int(content.numerator, cv.numerator),
                lcm_int(content.denominator, cv.denominator),
            )
    if content and content != 1:
        vec = [v.scale(1 / content) for v in vec]
    last = vec[-1]
    seen = set()
    for v in vec[:-1]:
        if v:
            f = RationalFunction(v, last)
            if not f.is_constant() and f not in seen:
                seen.add(f)
                yield f
    idx = [j for j, v in enumerate(vec) if v]
    for a in idx:
        for b in idx:
            if a < b:
                f = RationalFunction(vec[a], vec[b])
                if not f.is_constant() and f not in seen:
                    seen.add(f)
                    yield f


def find_rational_integral(D: Derivation, d: int) -> IntegralReport:
    """Decide existence for degree bound d and, if it holds, recover an integral.

    A single unpivoted elimination of the order-N matrix either runs to the
    end (its last pivot is then the order-N determinant) or stops at the
    first vanishing leading minor of order n0 <= N; in that case every
    larger leading minor, the order-N one included, vanishes as well.
    The returned integral is always verified exactly; when no candidate
    verifies, ``exists`` stays true and ``integral`` is None.
    """
    if d < 1:
        raise ValueError(f"degree bound must be positive, got {d}")
    N = index_bound(d)
    M, scale = _integer_rows(build_matrix(D, N).rows())
    k = _echelon_until_zero(M)
    if k == N:
        det = M[N - 1][N - 1]
        return IntegralReport(False, d, det.scale(1 / scale) if scale != 1 else det)
    n0 = k + 1
    for f in _candidates(_kernel_from_echelon(M, n0)):
        if is_integral(D, f):
            return IntegralReport(True, d, ZERO, f, n0)
    log.warning("no candidate integral verified for %s at degree %d", D, d)
    return IntegralReport(True, d, ZERO, None, n0)


def derivation_from_integral(f: RationalFunction) -> Derivation:
    """The Hamiltonian-type derivation killing u/v.

    p = -(u_y v - u v_y), q = u_x v - u v_x, so that D(u/v) = 0 identically.
    """
    u, v = f.num, f.den
    p = -(u.partial("y") * v - u * v.partial("y"))
    q = u.partial("x") * v - u * v.partial("x")
    return Derivation(p, q)
