import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from mpk.poly import (
    ONE,
    X,
    Y,
    ZERO,
    InexactDivisionError,
    Polynomial,
    gcd,
    gcd_prs,
    index_bound,
    monomial_at,
    monomial_index,
)

from oracles import dict_mul, from_sympy, polynomials, random_poly, to_sympy


# -- monomial enumeration --------------------------------------------------------

def test_first_monomials():
    shown = [str(monomial_at(k)) for k in range(1, 11)]
    assert shown[:6] == ["1", "y", "x", "y^2", "x*y", "x^2"]
    assert shown[6:] == ["y^3", "x*y^2", "x^2*y", "x^3"]


def test_fifth_monomial_is_xy():
    assert monomial_at(5) == (1, 1)


@pytest.mark.parametrize("d, n", [(0, 1), (1, 3), (2, 6), (3, 10)])
def test_index_bound(d, n):
    assert index_bound(d) == n


def test_index_bound_edges():
    for d in range(7):
        assert monomial_at(index_bound(d)).degree == d
        assert monomial_at(index_bound(d) + 1).degree == d + 1


@given(st.integers(min_value=1, max_value=500), st.integers(min_value=1, max_value=500))
def test_enumeration_is_graded(i, j):
    assert monomial_index(monomial_at(i)) == i
    if monomial_at(i).degree < monomial_at(j).degree:
        assert i < j


# -- arithmetic --------------------------------------------------------------------

def test_examples():
    assert (X + Y) * (X - Y) == X**2 - Y**2
    assert (X + Y) * ZERO == ZERO
    assert (X + 1) ** 2 == X**2 + 2 * X + 1
    assert str((X + 1) ** 2) == "x^2 + 2*x + 1"
    assert str(-2 * X * Y) == "-2*x*y"


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polynomials(rational=False), polynomials(rational=False))
def test_mul_matches_dict_oracle(a, b):
    assert (a * b).terms == dict_mul(a.terms, b.terms)


def test_kronecker_path_matches_dict_oracle():
    rng = random.Random(7)
    for _ in range(5):
        a = random_poly(rng, 30, density=0.8, lo=-10**6, hi=10**6)
        b = random_poly(rng, 25, density=0.8, lo=-50, hi=50)
        assert len(a) * len(b) >= 512  # large enough for the packed path
        assert (a * b).terms == dict_mul(a.terms, b.terms)


@given(polynomials(), polynomials())
def test_exact_div_inverts_mul(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


def test_exact_div_examples():
    assert (X**2 - Y**2).exact_div(X - Y) == X + Y
    assert (X * Y + 3).exact_div(X * Y + 3) == ONE
    with pytest.raises(InexactDivisionError):
        (X**2 + 1).exact_div(X + 1)


def test_kronecker_exact_div():
    rng = random.Random(3)
    a = random_poly(rng, 20, lo=-9, hi=9)
    b = random_poly(rng, 15, lo=-9, hi=9)
    assert (a * b).exact_div(b) == a


def test_partial_examples():
    assert (X**2 * Y).partial("x") == 2 * X * Y
    assert Polynomial.constant(7).partial("x") == ZERO
    assert (X**3 + Y**3).partial("y") == 3 * Y**2


@given(polynomials())
def test_partials_commute(a):
    assert a.partial("x").partial("y") == a.partial("y").partial("x")


def test_eval():
    assert (X + Y).eval(1, 2) == 3
    assert ZERO.eval(5, 7) == 0
    assert (X * Y).eval(Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 6)


@given(polynomials(), polynomials(), st.fractions(max_denominator=5), st.fractions(max_denominator=5))
def test_eval_is_a_ring_map(a, b, x0, y0):
    assert (a * b).eval(x0, y0) == a.eval(x0, y0) * b.eval(x0, y0)
    assert (a + b).eval(x0, y0) == a.eval(x0, y0) + b.eval(x0, y0)


# -- gcd -----------------------------------------------------------------------------

@given(polynomials(max_degree=3, rational=False), polynomials(max_degree=3, rational=False),
       polynomials(max_degree=2, rational=False))
def test_gcd_matches_sympy(a, b, c):
    a, b = a * c, b * c
    if a.is_zero() and b.is_zero():
        return
    ours = gcd(a, b)
    theirs = from_sympy(sympy.gcd(to_sympy(a), to_sympy(b)))
    assert ours == theirs.monic()


def test_heuristic_gcd_agrees_with_prs():
    rng = random.Random(11)
    for _ in range(10):
        g = random_poly(rng, 3)
        a = random_poly(rng, 3) * g
        b = random_poly(rng, 3) * g
        if a.is_zero() or b.is_zero():
            continue
        assert gcd(a, b) == gcd_prs(a, b).monic()
        assert a.exact_div(gcd(a, b)) * gcd(a, b) == a
