"""Command-line front end.

Every subcommand prints one deterministic result to stdout (text or JSON).
Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 numeric
non-convergence (the best estimate is still printed; a note goes to stderr).

Configuration precedence is flag, then environment (``MPK_DIGITS``,
``MPK_TOL``, ``MPK_FORMAT``, ``MPK_DMAX``), then the built-in default.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import expr as ex
from . import laplace, lagutinski, means, quadrature, special
from .derivation import Derivation
from .exact import binom, render_decimal

__all__ = ["CliConfig", "CliResult", "main", "run", "build_parser"]

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NONCONVERGENCE = 0, 1, 2, 3

_CONSTANTS = {"pi": math.pi, "e": math.e}


@dataclass(frozen=True)
class CliConfig:
    digits: int = 6
    tol: float = 1e-12
    format: str = "text"
    dmax: int = 3

    def __post_init__(self):
        if not 1 <= self.digits <= 17:
            raise UsageError(f"digits must be in [1, 17], got {self.digits}")
        if not 0 < self.tol < 1:
            raise UsageError(f"tol must be in (0, 1), got {self.tol}")
        if self.format not in ("text", "json"):
            raise UsageError(f"format must be text or json, got {self.format!r}")
        if not 1 <= self.dmax <= 6:
            raise UsageError(f"dmax must be in [1, 6], got {self.dmax}")

    @classmethod
    def resolve(cls, args: argparse.Namespace, env: Optional[Dict[str, str]] = None) -> "CliConfig":
        env = os.environ if env is None else env
        kw: Dict[str, Any] = {}
        for name, conv in (("digits", int), ("tol", float), ("format", str), ("dmax", int)):
            v = getattr(args, name, None)
            if v is None and f"MPK_{name.upper()}" in env:
                raw = env[f"MPK_{name.upper()}"]
                try:
                    v = conv(raw)
                except ValueError:
                    raise UsageError(f"bad MPK_{name.upper()} value {raw!r}") from None
            if v is not None:
                kw[name] = v
        return cls(**kw)


@dataclass
class CliResult:
    command: str
    value: Any
    text: str
    error_estimate: Optional[float] = None
    metadata: Dict[str, Any] = field(default_factory=dict)
    converged: bool = True


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kw):
        # prefix matching would make --d ambiguous with --digits and --dmax
        kw.setdefault("allow_abbrev", False)
        super().__init__(*args, **kw)

    def error(self, message):
        raise UsageError(message)


def _common(p: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps a flag given before the subcommand from being reset after it
    p.add_argument("--digits", type=int, default=argparse.SUPPRESS, help="decimal places (1-17)")
    p.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="numeric tolerance")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p.add_argument("--dmax", type=int, default=argparse.SUPPRESS, help="degree sweep bound (1-6)")


def _real(text: str) -> float:
    """A real argument; accepts expressions such as pi/2 and inf."""
    t = text.strip()
    if t.lower() in ("inf", "+inf", "infinity"):
        return math.inf
    if t.lower() in ("-inf", "-infinity"):
        return -math.inf
    return ex.eval_real(ex.parse(t, (), _CONSTANTS), {})


def _fmt(v: float, cfg: CliConfig) -> str:
    return render_decimal(v, cfg.digits)


# -- command bodies ----------------------------------------------------------------


def _mean(name: str, fn) -> Callable:
    def run(args, cfg: CliConfig) -> CliResult:
        r = fn(_real(args.a), _real(args.b), cfg.tol)
        return CliResult(name, r.value, _fmt(r.value, cfg), r.residual,
                         {"iterations": r.iterations})
    return run


def _scalar(name: str, fn, nargs: int) -> Callable:
    def run(args, cfg: CliConfig) -> CliResult:
        vals = [_real(v) for v in args.values[:nargs]]
        v = fn(*vals)
        return CliResult(name, v, _fmt(v, cfg))
    return run


def _cmd_binom(args, cfg: CliConfig) -> CliResult:
    try:
        n, k = int(args.n), int(args.k)
    except ValueError:
        raise UsageError("binom needs integer arguments") from None
    v = binom(n, k)
    return CliResult("binom", v, str(v))


def _cmd_integrate(args, cfg: CliConfig) -> CliResult:
    e = ex.parse(args.expr, (args.var,), _CONSTANTS)
    f = ex.compile_real(e, args.var)
    a, b = _real(args.lo), _real(args.hi)
    if math.isnan(a) or math.isnan(b):
        raise special.DomainError("integration limits must not be nan")
    sign = 1.0
    if a > b:
        a, b, sign = b, a, -1.0
    if a == b:
        r = quadrature.QuadratureResult(0.0, 0.0, 0, True)
    elif math.isinf(a) and math.isinf(b):
        r1 = quadrature.integrate_to_infinity(f, 0.0, cfg.tol / 2)
        r2 = quadrature.integrate_to_infinity(lambda u: f(-u), 0.0, cfg.tol / 2)
        r = quadrature.QuadratureResult(r1.value + r2.value, r1.error_estimate + r2.error_estimate,
                                        r1.evaluations + r2.evaluations, r1.converged and r2.converged)
    elif math.isinf(b):
        r = quadrature.integrate_to_infinity(f, a, cfg.tol)
    elif math.isinf(a):
        r = quadrature.integrate_to_infinity(lambda u: f(-u), -b, cfg.tol)
    else:
        r = quadrature.integrate(f, a, b, cfg.tol)
    v = sign * r.value
    return CliResult("integrate", v, _fmt(v, cfg), r.error_estimate,
                     {"evaluations": r.evaluations, "converged": r.converged}, r.converged)


def _cmd_laplace(args, cfg: CliConfig) -> CliResult:
    F = laplace.laplace_transform(ex.parse(args.expr, (args.var,), _CONSTANTS), args.var)
    text = F.render(args.image_var)
    return CliResult("laplace", text, text, None, {"exact": F.exact})


def _cmd_invlaplace(args, cfg: CliConfig) -> CliResult:
    F = laplace.parse_laplace_rational(args.expr, args.image_var)
    res = laplace.inverse_laplace_terms(F)
    text = ex.render(laplace.terms_to_expr(res.terms, args.var))
    poles = [{"pole": str(p.value), "multiplicity": p.multiplicity, "provenance": p.provenance}
             for p in res.poles]
    return CliResult("invlaplace", text, text, None, {"poles": poles})


def _poly_arg(text: str):
    return ex.to_polynomial(ex.parse(text, ("x", "y")))


def _cmd_detl(args, cfg: CliConfig) -> CliResult:
    try:
        n = int(args.n)
    except ValueError:
        raise UsageError(f"order must be an integer, got {args.n!r}") from None
    if n < 1:
        raise special.DomainError(f"order must be positive, got {n}")
    D = Derivation(_poly_arg(args.p), _poly_arg(args.q))
    det = lagutinski.detL(D, n)
    return CliResult("detl", str(det), str(det), None, {"order": n, "zero": det.is_zero()})


def _cmd_find_integral(args, cfg: CliConfig) -> CliResult:
    D = Derivation(_poly_arg(args.p), _poly_arg(args.q))
    if args.d is not None:
        if args.d < 1:
            raise special.DomainError(f"degree bound must be positive, got {args.d}")
        degrees: Sequence[int] = [args.d]
    else:
        degrees = range(1, cfg.dmax + 1)
    lines: List[str] = []
    sweep = []
    found = None
    for d in degrees:
        rep = lagutinski.find_rational_integral(D, d)
        if not rep.exists:
            lines.append(f"d={d}: none")
        elif rep.integral is None:
            lines.append(f"d={d}: exists (not recovered)")
        else:
            lines.append(f"d={d}: {rep.integral}")
        sweep.append({"degree": d, "exists": rep.exists,
                      "integral": None if rep.integral is None else str(rep.integral)})
        if rep.exists:
            # existence at d implies existence at every larger bound
            found = rep
            break
    value = None if found is None or found.integral is None else str(found.integral)
    return CliResult("find-integral", value, "\n".join(lines), None, {"degrees": sweep})


# -- parser and dispatch ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="mpk", description="Elliptic means, special functions, quadrature "
                  "and Lagutinski determinants.")
    _common(top)
    sub = top.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name: str, handler, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _common(p)
        p.set_defaults(handler=handler)
        return p

    for name, fn, h in (("agm", means.agm, "arithmetic-geometric mean"),
                        ("ghm", means.ghm, "geometric-harmonic mean"),
                        ("magm", means.magm, "modified arithmetic-geometric mean")):
        p = add(name, _mean(name, fn), h)
        p.add_argument("a")
        p.add_argument("b")
    p = add("ellipse", _scalar("ellipse", means.ellipse_circumference, 2), "ellipse circumference")
    p.add_argument("values", nargs=2, metavar="AXIS")
    p = add("ellipk", _scalar("ellipk", means.elliptic_k, 1), "complete elliptic integral K(k)")
    p.add_argument("values", nargs=1, metavar="K")
    p = add("ellipe", _scalar("ellipe", means.elliptic_e, 1), "complete elliptic integral E(k)")
    p.add_argument("values", nargs=1, metavar="K")
    p = add("gamma", _scalar("gamma", special.gamma, 1), "gamma function")
    p.add_argument("values", nargs=1, metavar="Z")
    p = add("beta", _scalar("beta", special.beta, 2), "beta function")
    p.add_argument("values", nargs=2, metavar="X")
    p = add("binom", _cmd_binom, "binomial coefficient")
    p.add_argument("n")
    p.add_argument("k")

    p = add("integrate", _cmd_integrate, "adaptive quadrature (absolute tolerance)")
    p.add_argument("expr")
    p.add_argument("--var", default="x")
    p.add_argument("--from", dest="lo", required=True)
    p.add_argument("--to", dest="hi", required=True)

    p = add("laplace", _cmd_laplace, "Laplace transform")
    p.add_argument("expr")
    p.add_argument("--var", default="t", help="time variable of the input")
    p.add_argument("--image-var", default="s", help="name of the transform variable in the output")

    p = add("invlaplace", _cmd_invlaplace, "inverse Laplace transform")
    p.add_argument("expr")
    p.add_argument("--var", default="t", help="time variable of the output")
    p.add_argument("--image-var", default="s", help="transform variable of the input")

    p = add("detl", _cmd_detl, "Lagutinski determinant of order N")
    p.add_argument("n", metavar="N")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)

    p = add("find-integral", _cmd_find_integral, "search for a rational first integral")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--d", type=int, default=None, help="single degree bound")
    return top


def _emit(res: CliResult, cfg: CliConfig, out) -> None:
    if cfg.format == "json":
        value = res.value
        if isinstance(value, float) and not math.isfinite(value):
            value = repr(value)
        doc = {
            "command": res.command,
            "value": value,
            "error_estimate": res.error_estimate,
            "metadata": res.metadata,
        }
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(res.text + "\n")


_VALUE_FLAGS = ("--p", "--q", "--from", "--to", "--tol", "--var", "--image-var")


def _glue_values(argv: Sequence[str]) -> List[str]:
    """Turn ``--q -y`` into ``--q=-y`` so argparse does not read -y as a flag."""
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
            else:
                out.extend([tok, nxt])
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str], out=None, err=None, env: Optional[Dict[str, str]] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(_glue_values(argv))
        cfg = CliConfig.resolve(args, env)
        res = args.handler(args, cfg)
    except UsageError as e:
        err.write(f"mpk: usage error: {e}\n")
        return EXIT_USAGE
    except (ex.ParseError, ex.NonPolynomialError) as e:
        err.write(f"mpk: parse error: {e}\n")
        return EXIT_USAGE
    except means.ConvergenceError as e:
        err.write(f"mpk: no convergence: {e}\n")
        return EXIT_NONCONVERGENCE
    except quadrature.QuadratureNaNError as e:
        err.write(f"mpk: domain error: {e}\n")
        return EXIT_DOMAIN
    except (ValueError, ArithmeticError) as e:
        err.write(f"mpk: domain error: {e}\n")
        return EXIT_DOMAIN
    _emit(res, cfg, out)
    if not res.converged:
        err.write(f"mpk: no convergence: best estimate above, error estimate "
                  f"{res.error_estimate!r} exceeds tol {cfg.tol!r}\n")
        return EXIT_NONCONVERGENCE
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
