import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mpk.expr import Call, Const, Mul, Var, eval_real, parse, render
from mpk.laplace import (
    LaplaceRational,
    Term,
    UnsupportedExpressionError,
    collect_terms,
    inverse_laplace_terms,
    inverse_laplace_transform,
    laplace_of_terms,
    laplace_transform,
    parse_laplace_rational,
    terms_to_expr,
)
from mpk.quadrature import integrate_to_infinity

S_MINUS_3 = LaplaceRational((1,), (-3, 1))


def test_exp_pair():
    assert laplace_transform("exp(3*t)") == S_MINUS_3
    assert laplace_transform("exp(3*t)").render("t") == "1/(t - 3)"
    f = inverse_laplace_transform(S_MINUS_3)
    assert f == Call("exp", Mul(Const(3), Var("t")))
    assert render(f) == "exp(3 * t)"


@pytest.mark.parametrize(
    "f, F",
    [
        ("1", "1/s"),
        ("t^2", "2/s^3"),
        ("sin(t)", "1/(s^2 + 1)"),
        ("cos(2*t)", "s/(s^2 + 4)"),
        ("t*exp(-t)", "1/(s^2 + 2*s + 1)"),
        ("exp(-2*t)*sin(3*t)", "3/(s^2 + 4*s + 13)"),
    ],
)
def test_table(f, F):
    assert laplace_transform(f).render() == F
    assert laplace_transform(f) == parse_laplace_rational(F)


@pytest.mark.parametrize("F, f", [("1/(s - 3)", "exp(3 * t)"), ("1/s", "1"), ("1/(s^2 + 1)", "sin(t)")])
def test_inverse_examples(F, f):
    assert render(inverse_laplace_transform(F)) == f


def test_transform_against_quadrature_at_s3():
    r = integrate_to_infinity(lambda t: math.exp(-3 * t) * math.exp(0 * t), 0.0, 1e-11)
    assert r.value == pytest.approx(float(laplace_transform("1")(3)), abs=1e-10)


def test_unsupported_expressions():
    for text in ("1/t", "exp(t^2)", "sqrt(t)", "sin(t*t)"):
        with pytest.raises(UnsupportedExpressionError) as err:
            laplace_transform(text)
        assert "t" in str(err.value)


def test_improper_transform_rejected():
    with pytest.raises(UnsupportedExpressionError):
        inverse_laplace_transform("s/(s + 1)")


def test_multiplicity_cap():
    assert render(inverse_laplace_transform("6/s^4")) == "t^3"
    with pytest.raises(UnsupportedExpressionError):
        inverse_laplace_transform("1/s^5")


def test_pole_provenance():
    res = inverse_laplace_terms(parse_laplace_rational("1/((s - 1)*(s^2 + 4)*(s^2 - 2))"))
    kinds = sorted(p.provenance for p in res.poles)
    assert kinds == ["exact", "quadratic", "quadratic", "quadratic"]
    res = inverse_laplace_terms(parse_laplace_rational("1/(s^3 + s + 1)"))
    assert {p.provenance for p in res.poles} == {"numeric"}


def test_numeric_poles_round_trip():
    F = parse_laplace_rational("(s + 2)/(s^5 + s + 1)")
    g = inverse_laplace_terms(F).terms
    G = laplace_of_terms(g)
    for s in (2.0, 3.5, 10.0):
        assert float(G(s)) == pytest.approx(float(F(Fraction(s))), rel=1e-9)


def test_cos_squared_collects_exactly():
    terms = collect_terms(parse("cos(t)^2", ("t",)))
    assert terms == {Term(0, 0, 0, "cos"): Fraction(1, 2), Term(0, 0, 2, "cos"): Fraction(1, 2)}


# -- random instances of the grammar ----------------------------------------------

@st.composite
def grammar_terms(draw, max_a=3, min_a=-3):
    terms = {}
    used = set()
    for _ in range(draw(st.integers(1, 3))):
        a = draw(st.integers(min_a, max_a))
        b = draw(st.integers(0, 3))
        if (a, b) in used:
            continue
        used.add((a, b))
        n = draw(st.integers(0, 2))
        kinds = ["cos"] if b == 0 else draw(st.sampled_from([["cos"], ["sin"], ["cos", "sin"]]))
        for kind in kinds:
            num = draw(st.integers(-9, 9).filter(bool))
            terms[Term(n, a, b, kind)] = Fraction(num, draw(st.integers(1, 4)))
    return terms


def _close(t1, t2, tol=1e-9):
    keys = set(t1) | set(t2)
    return all(abs(float(t1.get(k, 0)) - float(t2.get(k, 0))) <= tol for k in keys)


@given(grammar_terms())
def test_round_trip(terms):
    F = laplace_of_terms(terms)
    assert _close(inverse_laplace_terms(F).terms, terms)


@given(grammar_terms(), grammar_terms(), st.fractions(max_denominator=5), st.fractions(max_denominator=5))
def test_linearity(f, g, alpha, beta):
    combo = {}
    for src, w in ((f, alpha), (g, beta)):
        for k, c in src.items():
            combo[k] = combo.get(k, 0) + w * c
    combo = {k: c for k, c in combo.items() if c != 0}
    assert laplace_of_terms(combo) == laplace_of_terms(f) * alpha + laplace_of_terms(g) * beta


@given(grammar_terms(max_a=0))
def test_against_quadrature(terms):
    f = terms_to_expr(terms)
    F = laplace_of_terms(terms)
    for s in (1, 2, 5):
        r = integrate_to_infinity(lambda t: eval_real(f, {"t": t}) * math.exp(-s * t), 0.0, 1e-10)
        assert r.converged
        assert r.value == pytest.approx(float(F(Fraction(s))), abs=1e-7)


def test_expression_round_trip_through_text():
    rng = random.Random(9)
    for _ in range(20):
        a, b = rng.randint(-3, 3), rng.randint(1, 3)
        text = f"{rng.randint(1, 5)}*t*exp({a}*t)*sin({b}*t) - cos({b}*t)"
        F = laplace_transform(text)
        back = inverse_laplace_transform(F)
        assert laplace_transform(back) == F
