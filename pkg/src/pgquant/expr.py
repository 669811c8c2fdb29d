"""Parser, evaluator and printer for generator expressions.

Grammar (whitespace-insensitive)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' UINT)?
    atom    := NUMBER | GENERATOR | '(' expr ')'

Generators are ``th<i>`` / ``bth<i>`` with 1-based mode indices; the index
may be omitted when there is a single mode (``th``, ``bth``).  Number
literals are floats, optionally suffixed with ``i`` for a pure imaginary
value (``2``, ``1.5e-3``, ``2i``, bare ``i``); a general complex constant
is written as a parenthesized sum, ``(1+2i)``.  ``*`` is the
noncommutative algebra product and is evaluated left to right exactly as
written -- input order is never silently canonicalized.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import ParaPoly
from .qnum import Deformation

__all__ = [
    "ExprSyntaxError",
    "Lit",
    "Gen",
    "Neg",
    "Add",
    "Sub",
    "Mul",
    "Pow",
    "parse",
    "eval_expression",
    "poly_to_expr",
]


class ExprSyntaxError(ValueError):
    """Syntax error with the byte offset of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


@dataclass(frozen=True)
class Lit:
    value: complex


@dataclass(frozen=True)
class Gen:
    mode: int
    barred: bool


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<gen>bth\d*|th\d*)
      | (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?i?|i)
      | (?P<op>[*+\-^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, modes: int):
        self.text = text
        self.modes = modes
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> _Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _next(self) -> _Token:
        tok = self._peek()
        if tok is None:
            raise ExprSyntaxError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def _at_op(self, *ops: str) -> bool:
        tok = self._peek()
        return tok is not None and tok.kind == "op" and tok.text in ops

    def parse(self):
        node = self._expr()
        tok = self._peek()
        if tok is not None:
            raise ExprSyntaxError(f"unexpected token {tok.text!r}", tok.pos)
        return node

    def _expr(self):
        node = self._term()
        while self._at_op("+", "-"):
            op = self._next().text
            rhs = self._term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def _term(self):
        node = self._unary()
        while self._at_op("*"):
            self._next()
            node = Mul(node, self._unary())
        return node

    def _unary(self):
        if self._at_op("-"):
            self._next()
            return Neg(self._unary())
        return self._power()

    def _power(self):
        base = self._atom()
        if self._at_op("^"):
            self._next()
            tok = self._peek()
            if tok is None:
                raise ExprSyntaxError("integer power expected after '^'", len(self.text))
            if tok.kind != "num" or not re.fullmatch(r"\d+", tok.text):
                raise ExprSyntaxError("integer power expected after '^'", tok.pos)
            self._next()
            return Pow(base, int(tok.text))
        return base

    def _atom(self):
        tok = self._peek()
        if tok is None:
            raise ExprSyntaxError("unexpected end of input", len(self.text))
        if tok.kind == "num":
            self._next()
            return Lit(_literal_value(tok.text))
        if tok.kind == "gen":
            self._next()
            return self._generator(tok)
        if self._at_op("("):
            self._next()
            node = self._expr()
            if not self._at_op(")"):
                where = self._peek()
                pos = where.pos if where is not None else len(self.text)
                raise ExprSyntaxError("expected ')'", pos)
            self._next()
            return node
        raise ExprSyntaxError(f"unexpected token {tok.text!r}", tok.pos)

    def _generator(self, tok: _Token) -> Gen:
        barred = tok.text.startswith("bth")
        digits = tok.text[3:] if barred else tok.text[2:]
        if digits == "":
            if self.modes != 1:
                raise ExprSyntaxError(
                    f"generator index required when modes={self.modes}", tok.pos
                )
            mode = 1
        else:
            mode = int(digits)
        if not 1 <= mode <= self.modes:
            raise ExprSyntaxError(
                f"unknown generator index {mode} (modes=1..{self.modes})", tok.pos
            )
        return Gen(mode, barred)


def _literal_value(text: str) -> complex:
    if text == "i":
        return 1j
    if text.endswith("i"):
        return complex(0.0, float(text[:-1]))
    return complex(float(text), 0.0)


def parse(text: str, modes: int = 1):
    """Parse an expression; generator indices are validated against ``modes``."""
    if modes < 1:
        raise ValueError(f"modes must be >= 1, got {modes}")
    return _Parser(text, modes).parse()


def eval_expression(node, dfm: Deformation, modes: int = 1) -> ParaPoly:
    """Evaluate a parsed expression to a polynomial.

    Products multiply in the algebra exactly in the order written, so
    ``bth*th`` and ``th*bth`` evaluate to polynomials differing by the
    commutation phase.
    """
    if isinstance(node, Lit):
        return ParaPoly.constant(dfm, modes, node.value)
    if isinstance(node, Gen):
        if node.mode > modes:
            raise ValueError(f"generator index {node.mode} exceeds modes={modes}")
        return ParaPoly.generator(dfm, modes, node.mode, barred=node.barred)
    if isinstance(node, Neg):
        return -eval_expression(node.operand, dfm, modes)
    if isinstance(node, Add):
        return eval_expression(node.left, dfm, modes) + eval_expression(node.right, dfm, modes)
    if isinstance(node, Sub):
        return eval_expression(node.left, dfm, modes) - eval_expression(node.right, dfm, modes)
    if isinstance(node, Mul):
        return eval_expression(node.left, dfm, modes) * eval_expression(node.right, dfm, modes)
    if isinstance(node, Pow):
        out = ParaPoly.unit(dfm, modes)
        base = eval_expression(node.base, dfm, modes)
        for _ in range(node.exponent):
            out = out * base
        return out
    raise TypeError(f"not an expression node: {node!r}")


def _fmt_float(x: float) -> str:
    # repr round-trips exactly through float()
    return repr(x)


def _fmt_complex(c: complex) -> str:
    re_, im = c.real, c.imag
    if im == 0.0:
        return _fmt_float(re_)
    if re_ == 0.0:
        return _fmt_float(im) + "i"
    sign = "+" if im >= 0 else "-"
    return f"({_fmt_float(re_)}{sign}{_fmt_float(abs(im))}i)"


def poly_to_expr(p: ParaPoly) -> str:
    """Render a polynomial as a parseable expression.

    Round-trips exactly: parsing and evaluating the output reproduces the
    same coefficients, because the monomial factors are emitted in
    canonical order (no reordering phases) and floats are printed with
    full precision.
    """
    if not p.terms:
        return "0"
    parts = []
    for (theta, bar), c in sorted(p.terms.items()):
        gens = []
        for i, power in enumerate(theta):
            if power:
                name = "th" if p.d == 1 else f"th{i + 1}"
                gens.append(name + (f"^{power}" if power > 1 else ""))
        for i, power in enumerate(bar):
            if power:
                name = "bth" if p.d == 1 else f"bth{i + 1}"
                gens.append(name + (f"^{power}" if power > 1 else ""))
        if not gens:
            parts.append(_fmt_complex(c))
        elif c == 1:
            parts.append("*".join(gens))
        elif c == -1:
            parts.append("-" + "*".join(gens))
        else:
            parts.append(_fmt_complex(c) + "*" + "*".join(gens))
    return " + ".join(parts)
