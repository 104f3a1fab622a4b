import io
import json
import pathlib

import jsonschema
import pytest

from mpk.cli import CliConfig, UsageError, run

SCHEMA = json.loads((pathlib.Path(__file__).parents[1] / "docs" / "output.schema.json").read_text())


def call(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err, env=env or {})
    return code, out.getvalue(), err.getvalue()


# text outputs; the numeric ones agree with 30-digit mpmath values
GOLDEN = [
    (("agm", "1", "5", "--digits", "3"), "2.604\n"),
    (("ghm", "1", "5", "--digits", "3"), "1.920\n"),
    (("beta", "2", "3", "--digits", "4"), "0.0833\n"),
    (("agm", "1", "5"), "2.604008\n"),
    (("ellipse", "3", "2"), "15.865440\n"),
    (("ellipse", "1", "1"), "6.283185\n"),
    (("ellipk", "0.5"), "1.685750\n"),
    (("ellipe", "0.5"), "1.467462\n"),
    (("gamma", "4.5"), "11.631728\n"),
    (("beta", "0.5", "0.5", "--digits", "10"), "3.1415926536\n"),
    (("binom", "10", "3"), "120\n"),
    (("integrate", "sin(x)", "--from", "0", "--to", "pi"), "2.000000\n"),
    (("integrate", "exp(-x)", "--from", "0", "--to", "inf"), "1.000000\n"),
    (("detl", "1", "--p", "x", "--q", "y"), "1\n"),
    (("detl", "3", "--p", "1", "--q", "1"), "0\n"),
    (("detl", "3", "--p", "x", "--q", "-y"), "-2*x*y\n"),
    (("detl", "5", "--p", "x", "--q", "-y"), "0\n"),
    (("detl", "3", "--p", "x", "--q", "y"), "0\n"),
    (("laplace", "exp(3*t)"), "1/(s - 3)\n"),
    (("invlaplace", "1/(s-3)"), "exp(3 * t)\n"),
    (("invlaplace", "1/(s^2+1)"), "sin(t)\n"),
    (("find-integral", "--p", "x", "--q", "-y"), "d=1: none\nd=2: -x*y\n"),
]


@pytest.mark.parametrize("argv, expected", GOLDEN, ids=[" ".join(a) for a, _ in GOLDEN])
def test_golden_text(argv, expected):
    code, out, err = call(*argv)
    assert (code, out, err) == (0, expected, "")


@pytest.mark.parametrize("argv", [a for a, _ in GOLDEN[:14]])
def test_text_is_deterministic(argv):
    assert call(*argv) == call(*argv)


JSON_CASES = [
    ("agm", "1", "5"),
    ("magm", "1", "5"),
    ("ellipse", "3", "2"),
    ("ellipk", "0.3"),
    ("ellipe", "0.3"),
    ("gamma", "0.5"),
    ("beta", "2", "3"),
    ("binom", "7", "2"),
    ("integrate", "x^2", "--from", "0", "--to", "1"),
    ("integrate", "exp(-x^2)", "--from", "-inf", "--to", "inf"),
    ("laplace", "t*exp(2*t)"),
    ("invlaplace", "1/(s^2+4)"),
    ("detl", "3", "--p", "x", "--q", "-y"),
    ("find-integral", "--p", "x", "--q", "-y"),
    ("gamma", "200"),
]


@pytest.mark.parametrize("argv", JSON_CASES, ids=[" ".join(a) for a in JSON_CASES])
def test_json_validates(argv):
    code, out, _ = call(*argv, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["command"] == argv[0]


def test_json_values():
    _, out, _ = call("beta", "2", "3", "--format", "json")
    assert abs(json.loads(out)["value"] - 1 / 12) < 1e-15
    _, out, _ = call("integrate", "x^2", "--from", "0", "--to", "1", "--format", "json")
    doc = json.loads(out)
    assert abs(doc["value"] - 1 / 3) <= doc["error_estimate"] + 1e-15
    assert doc["error_estimate"] <= 1e-12


@pytest.mark.parametrize(
    "argv, code",
    [
        (("agm", "1"), 1),
        (("frobnicate",), 1),
        (("agm", "1", "5", "--digits", "0"), 1),
        (("agm", "1", "5", "--tol", "2"), 1),
        (("detl", "3", "--p", "sin(x)", "--q", "y"), 1),
        (("integrate", "x +", "--from", "0", "--to", "1"), 1),
        (("find-integral", "--p", "x", "--q", "y", "--dmax", "9"), 1),
        (("gamma", "-1"), 2),
        (("agm", "-1", "5"), 2),
        (("ellipk", "1"), 2),
        (("integrate", "sqrt(x)", "--from", "-1", "--to", "1"), 2),
        (("laplace", "exp(t^2)"), 2),
        (("integrate", "1/sqrt(x)", "--from", "0", "--to", "1", "--tol", "1e-15"), 3),
    ],
)
def test_exit_codes(argv, code):
    got, _, err = call(*argv)
    assert got == code
    assert err.startswith("mpk: ")


def test_nonconvergence_still_prints_estimate():
    code, out, err = call("integrate", "1/sqrt(x)", "--from", "0", "--to", "1", "--tol", "1e-15")
    assert code == 3
    assert abs(float(out) - 2.0) < 1e-6
    assert "error estimate" in err


def test_env_precedence():
    env = {"MPK_DIGITS": "3"}
    assert call("agm", "1", "5", env=env)[1] == "2.604\n"
    assert call("agm", "1", "5", "--digits", "2", env=env)[1] == "2.60\n"
    assert call("agm", "1", "5", env={"MPK_FORMAT": "json"})[1].startswith("{")
    assert call("agm", "1", "5", env={"MPK_DIGITS": "99"})[0] == 1


def test_dmax_from_env_limits_sweep():
    _, out, _ = call("find-integral", "--p", "x", "--q", "-y", env={"MPK_DMAX": "1"})
    assert out == "d=1: none\n"


def test_config_bounds():
    for bad in ({"digits": 0}, {"digits": 18}, {"tol": 0.0}, {"tol": 1.0}, {"dmax": 7}, {"format": "xml"}):
        with pytest.raises(UsageError):
            CliConfig(**bad)
    assert CliConfig() == CliConfig(digits=6, tol=1e-12, format="text", dmax=3)
