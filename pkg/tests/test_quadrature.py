import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mpk.means import agm, magm
from mpk.quadrature import QuadratureNaNError, integrate, integrate_to_infinity

from corpus import CORPUS, INF


def _run(f, a, b, tol, budget=None):
    kw = {} if budget is None else {"budget": budget}
    if b == INF:
        return integrate_to_infinity(f, a, tol, **kw)
    return integrate(f, a, b, tol, **kw)


@pytest.mark.parametrize("name, f, a, b, tol, exact", CORPUS, ids=[c[0] for c in CORPUS])
def test_corpus(name, f, a, b, tol, exact):
    r = _run(f, a, b, tol)
    assert abs(r.value - exact) <= tol
    if r.converged:
        assert r.error_estimate <= tol
    assert r.evaluations <= 1_000_000


@pytest.mark.parametrize("name, f, a, b, tol, exact", CORPUS, ids=[c[0] for c in CORPUS])
def test_tightening_never_hurts(name, f, a, b, tol, exact):
    errors = [abs(_run(f, a, b, t).value - exact) for t in (1e-6, 1e-8, 1e-10) if t >= tol]
    assert all(e1 <= e0 for e0, e1 in zip(errors, errors[1:]))


def test_examples():
    assert integrate(lambda x: x * x, 0, 1, 1e-12).value == pytest.approx(1 / 3, abs=1e-12)
    arc = integrate(lambda p: math.sqrt(4 * math.cos(p) ** 2 + math.sin(p) ** 2), 0, math.pi / 2, 1e-12)
    assert arc.value == pytest.approx(0.5 * math.pi * magm(4, 1).value / agm(2, 1).value, abs=1e-9)
    assert integrate(lambda t: t * (1 - t) ** 2, 0, 1, 1e-12).value == pytest.approx(1 / 12, abs=1e-12)
    assert integrate_to_infinity(lambda x: math.exp(-x), 0, 1e-12).value == pytest.approx(1, abs=1e-12)
    assert integrate_to_infinity(lambda x: x**4 * math.exp(-x), 0, 1e-10).value == pytest.approx(24, abs=1e-10)


def test_singular_endpoints_pi():
    r = integrate(lambda t: t**-0.5 * (1 - t) ** -0.5, 0, 1, 1e-7)
    assert abs(r.value - math.pi) <= 1e-7


def test_unreachable_tolerance_is_reported():
    # the mass within one ulp of t = 1 is about 2e-8, beyond double precision
    r = integrate(lambda t: t**-0.5 * (1 - t) ** -0.5, 0, 1, 1e-10)
    assert not r.converged
    assert r.error_estimate > 1e-10


@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=9), min_size=1, max_size=11))
def test_polynomials_are_exact(coeffs):
    exact = sum(Fraction(c) / (k + 1) for k, c in enumerate(coeffs))
    fc = [float(c) for c in coeffs]
    r = integrate(lambda x: sum(c * x**k for k, c in enumerate(fc)), 0, 1, 1e-13)
    assert abs(r.value - float(exact)) <= 1e-13


@given(st.floats(0.05, 0.95))
def test_additivity(c):
    tol = 1e-10
    f = lambda t: math.exp(-t) * math.cos(5 * t) + t**-0.5
    whole = integrate(f, 0, 1, tol).value
    parts = integrate(f, 0, c, tol).value + integrate(f, c, 1, tol).value
    assert abs(whole - parts) <= 2 * tol


def test_budget_exhaustion_is_not_an_error():
    r = integrate(lambda t: math.sin(1 / t), 0, 1, 1e-14, budget=600)
    assert not r.converged
    assert r.evaluations <= 600


def test_nan_reports_abscissa():
    with pytest.raises(QuadratureNaNError) as err:
        integrate(lambda t: math.nan if t > 0.5 else 1.0, 0, 1, 1e-8)
    assert err.value.abscissa > 0.5


def test_bad_arguments():
    with pytest.raises(ValueError):
        integrate(math.exp, 1, 0, 1e-8)
    with pytest.raises(ValueError):
        integrate(math.exp, 0, 1, 0)
    with pytest.raises(ValueError):
        integrate(math.exp, 0, INF, 1e-8)
