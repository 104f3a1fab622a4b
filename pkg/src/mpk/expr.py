"""Expression trees and a recursive-descent parser for the CLI input language.

Grammar (``docs/grammar.ebnf`` has the full version)::

    expr    = term { ("+" | "-") term } ;
    term    = unary { ("*" | "/") unary } ;
    unary   = "-" unary | power ;
    power   = primary [ ("^" | "**") ["-"] INTEGER ] ;
    primary = NUMBER | NAME | NAME "(" expr ")" | "(" expr ")" ;

Multiplication is always explicit (``3*t``, never ``3t``). Subtraction and
division are stored as ``Add(a, Neg(b))`` and ``Mul(a, Reciprocal(b))``.
Numeric literals (integers, decimals, scientific notation) become exact
rationals.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Union

from .exact import parse_rational
from .poly import ONE, X, Y, Polynomial

__all__ = [
    "Expr",
    "Const",
    "Var",
    "Add",
    "Mul",
    "Neg",
    "Pow",
    "Call",
    "Reciprocal",
    "FUNCTIONS",
    "ParseError",
    "UnknownIdentifierError",
    "NonPolynomialError",
    "UnboundVariableError",
    "parse",
    "render",
    "to_polynomial",
    "eval_real",
    "free_vars",
]

FUNCTIONS = ("exp", "sin", "cos", "sqrt")


class Expr:
    """Base class of expression nodes (all nodes are frozen dataclasses)."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Const(Expr):
    value: Union[Fraction, int, float]


@dataclass(frozen=True)
class Var(Expr):
    name: str


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Call(Expr):
    name: str
    arg: Expr


@dataclass(frozen=True)
class Reciprocal(Expr):
    arg: Expr


class ParseError(ValueError):
    """Syntax error; ``offset`` is the 1-based character position."""

    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f" (expected {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class UnknownIdentifierError(ParseError):
    pass


class NonPolynomialError(ValueError):
    def __init__(self, node: Expr, reason: str = "not polynomial"):
        self.node = node
        super().__init__(f"{reason}: {render(node)}")


class UnboundVariableError(KeyError):
    pass


# -- lexer ------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\*\*|[-+*/^(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # "number" | "name" | "op" | "end"
    text: str
    offset: int  # 1-based


def _tokenize(text: str) -> List[_Token]:
    out: List[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            tok = m.group()
            if kind == "op" and tok == "**":
                tok = "^"
            out.append(_Token(kind, tok, pos + 1))
        pos = m.end()
    out.append(_Token("end", "", len(text) + 1))
    return out


# -- parser -----------------------------------------------------------------

_OPERAND_START = frozenset({"number", "name", "'('", "'-'"})


class _Parser:
    def __init__(self, text: str, variables: Sequence[str], constants: Mapping[str, float]):
        self.toks = _tokenize(text)
        self.i = 0
        self.variables = frozenset(variables)
        self.constants = dict(constants)

    @property
    def tok(self) -> _Token:
        return self.toks[self.i]

    def advance(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, expected: Iterable[str]):
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.offset, expected)

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            self.error({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"})
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            right = self.term()
            left = Add(left, right if op == "+" else Neg(right))
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance().text
            right = self.unary()
            left = Mul(left, right if op == "*" else Reciprocal(right))
        return left

    def unary(self) -> Expr:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.primary()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            sign = 1
            if self.tok.kind == "op" and self.tok.text == "-":
                self.advance()
                sign = -1
            t = self.tok
            if t.kind != "number" or not t.text.isdigit():
                raise ParseError("exponent must be an integer literal", t.offset, {"integer"})
            self.advance()
            return Pow(base, sign * int(t.text))
        return base

    def primary(self) -> Expr:
        t = self.tok
        if t.kind == "number":
            self.advance()
            return Const(_norm(parse_rational(t.text)))
        if t.kind == "name":
            self.advance()
            if self.tok.kind == "op" and self.tok.text == "(":
                if t.text not in FUNCTIONS:
                    raise UnknownIdentifierError(f"unknown function {t.text!r}", t.offset, FUNCTIONS)
                self.advance()
                arg = self.expr()
                self.expect(")")
                return Call(t.text, arg)
            if t.text in self.variables:
                return Var(t.text)
            if t.text in self.constants:
                return Const(float(self.constants[t.text]))
            raise UnknownIdentifierError(
                f"unknown identifier {t.text!r}", t.offset, sorted(self.variables)
            )
        if t.kind == "op" and t.text == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        self.error(_OPERAND_START)

    def expect(self, text: str) -> None:
        if self.tok.kind == "op" and self.tok.text == text:
            self.advance()
            return
        self.error({f"'{text}'"})


def _norm(q: Fraction):
    return q.numerator if q.denominator == 1 else q


def parse(text: str, variables: Sequence[str] = ("x", "y"), constants: Mapping[str, float] = {}) -> Expr:
    """Parse ``text``; every free name must be in ``variables`` or ``constants``."""
    return _Parser(text, variables, constants).parse()


# -- rendering ----------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_UNARY, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def _render_const(v) -> str:
    if isinstance(v, float):
        return repr(v)
    q = Fraction(v)
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    while d % 2 == 0:
        d //= 2
    while d % 5 == 0:
        d //= 5
    if d == 1:
        # terminating decimal
        digits = 0
        den = q.denominator
        while den != 1:
            den = den // math.gcd(den, 10)
            digits += 1
        scaled = abs(q.numerator) * 10**digits // q.denominator
        whole, frac = divmod(scaled, 10**digits)
        s = f"{whole}.{frac:0{digits}d}"
        return f"-{s}" if q < 0 else s
    return f"({q.numerator}/{q.denominator})"


def _prec(e: Expr) -> int:
    if isinstance(e, Add):
        return _PREC_ADD
    if isinstance(e, (Mul, Reciprocal)):
        return _PREC_MUL
    if isinstance(e, Neg):
        return _PREC_UNARY
    if isinstance(e, Pow):
        return _PREC_POW
    if isinstance(e, Const):
        v = e.value
        if v < 0 or (isinstance(v, float) and not math.isfinite(v)):
            return _PREC_UNARY
    return _PREC_ATOM


def _r(e: Expr, min_prec: int) -> str:
    s = render(e)
    return f"({s})" if _prec(e) < min_prec else s


def render(e: Expr) -> str:
    """Text that parses back to a structurally equal tree."""
    if isinstance(e, Const):
        return _render_const(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Add):
        if isinstance(e.right, Neg):
            return f"{_r(e.left, _PREC_ADD)} - {_r(e.right.arg, _PREC_MUL)}"
        return f"{_r(e.left, _PREC_ADD)} + {_r(e.right, _PREC_MUL)}"
    if isinstance(e, Mul):
        if isinstance(e.right, Reciprocal):
            return f"{_r(e.left, _PREC_MUL)} / {_r(e.right.arg, _PREC_UNARY)}"
        return f"{_r(e.left, _PREC_MUL)} * {_r(e.right, _PREC_UNARY)}"
    if isinstance(e, Reciprocal):
        return f"1 / {_r(e.arg, _PREC_UNARY)}"
    if isinstance(e, Neg):
        return f"-{_r(e.arg, _PREC_UNARY)}"
    if isinstance(e, Pow):
        return f"{_r(e.base, _PREC_ATOM)}^{e.exponent}"
    if isinstance(e, Call):
        return f"{e.name}({render(e.arg)})"
    raise TypeError(f"not an expression node: {e!r}")


# -- lowering -------------------------------------------------------------------


def free_vars(e: Expr) -> FrozenSet[str]:
    if isinstance(e, Var):
        return frozenset({e.name})
    if isinstance(e, (Add, Mul)):
        return free_vars(e.left) | free_vars(e.right)
    if isinstance(e, (Neg, Reciprocal, Call)):
        return free_vars(e.arg)
    if isinstance(e, Pow):
        return free_vars(e.base)
    return frozenset()


def to_polynomial(e: Expr) -> Polynomial:
    """Expand a polynomial expression in x and y exactly."""
    if isinstance(e, Const):
        if isinstance(e.value, float):
            raise NonPolynomialError(e, "inexact constant")
        return Polynomial.constant(e.value)
    if isinstance(e, Var):
        if e.name == "x":
            return X
        if e.name == "y":
            return Y
        raise NonPolynomialError(e, "variable other than x, y")
    if isinstance(e, Add):
        return to_polynomial(e.left) + to_polynomial(e.right)
    if isinstance(e, Mul):
        return to_polynomial(e.left) * to_polynomial(e.right)
    if isinstance(e, Neg):
        return -to_polynomial(e.arg)
    if isinstance(e, Pow):
        if e.exponent < 0:
            raise NonPolynomialError(e, "negative exponent")
        return to_polynomial(e.base) ** e.exponent
    if isinstance(e, Reciprocal):
        d = to_polynomial(e.arg)
        if not d.is_constant():
            raise NonPolynomialError(e, "division by a non-constant")
        if d.is_zero():
            raise ZeroDivisionError(f"division by zero in {render(e)}")
        return Polynomial.constant(Fraction(1) / Fraction(d.coeff((0, 0))))
    raise NonPolynomialError(e)


def eval_real(e: Expr, bindings: Mapping[str, float]) -> float:
    """IEEE double evaluation: overflow gives inf, invalid operations give nan."""
    if isinstance(e, Const):
        return float(e.value)
    if isinstance(e, Var):
        try:
            return float(bindings[e.name])
        except KeyError:
            raise UnboundVariableError(e.name) from None
    if isinstance(e, Add):
        return eval_real(e.left, bindings) + eval_real(e.right, bindings)
    if isinstance(e, Mul):
        return eval_real(e.left, bindings) * eval_real(e.right, bindings)
    if isinstance(e, Neg):
        return -eval_real(e.arg, bindings)
    if isinstance(e, Reciprocal):
        v = eval_real(e.arg, bindings)
        if v == 0.0:
            return math.copysign(math.inf, v)
        return 1.0 / v
    if isinstance(e, Pow):
        v = eval_real(e.base, bindings)
        n = e.exponent
        if n < 0:
            if v == 0.0:
                return math.copysign(math.inf, v) if n % 2 else math.inf
            v, n = 1.0 / v, -n
        try:
            return v**n
        except OverflowError:
            return math.inf if v > 0 or n % 2 == 0 else -math.inf
    if isinstance(e, Call):
        v = eval_real(e.arg, bindings)
        if e.name == "exp":
            try:
                return math.exp(v)
            except OverflowError:
                return math.inf
        if math.isnan(v):
            return v
        if e.name == "sqrt":
            return math.sqrt(v) if v >= 0 else math.nan
        if math.isinf(v):
            return math.nan
        return math.sin(v) if e.name == "sin" else math.cos(v)
    raise TypeError(f"not an expression node: {e!r}")


def compile_real(e: Expr, var: str):
    """A one-argument float callable for quadrature."""
    return lambda t: eval_real(e, {var: t})
