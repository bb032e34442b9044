"""Parser for univariate polynomial expressions in x.

Grammar: integer and rational literals (``a`` or ``a/b``), the variable
``x``, operators ``+ - * ^`` with the usual precedence, parentheses, and
implicit multiplication only in coefficient-adjacent position (``15x``,
``1/2x^3``).  Exponents are literal nonnegative integers.  Whitespace is
ignored everywhere; errors carry the offset into the source text.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError
from .polys import Polynomial

MAX_EXPONENT = 1000


class ParseError(InvalidInputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "x", "op", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", text[i:j], i))
            i = j
            continue
        if c == "x":
            tokens.append(_Token("x", "x", i))
            i += 1
            continue
        if c.isalpha():
            raise ParseError(f"unknown variable {c!r} (only x is allowed)", i)
        if c in "+-*^/()":
            tokens.append(_Token("op", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        poly = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return poly

    def expr(self) -> Polynomial:
        tok = self.peek()
        negate = False
        if tok.kind == "op" and tok.text in "+-":
            self.advance()
            negate = tok.text == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                acc = acc - rhs if tok.text == "-" else acc + rhs
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.advance()
            inner = self.factor()
            return -inner if tok.text == "-" else inner
        base = self.atom()
        return self.power_suffix(base)

    def power_suffix(self, base: Polynomial) -> Polynomial:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            e = self.exponent()
            return base**e
        return base

    def exponent(self) -> int:
        tok = self.peek()
        if tok.kind != "num":
            raise ParseError("expected a nonnegative integer exponent", tok.pos)
        self.advance()
        e = int(tok.text)
        if e > MAX_EXPONENT:
            raise ParseError(f"exponent {e} exceeds the limit {MAX_EXPONENT}", tok.pos)
        return e

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            value = Fraction(int(tok.text))
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.advance()
                den = self.peek()
                if den.kind != "num":
                    raise ParseError("expected an integer denominator", den.pos)
                self.advance()
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.pos)
                value /= int(den.text)
                nxt = self.peek()
            coeff = Polynomial((value,))
            if nxt.kind == "x":  # coefficient-adjacent implicit product: 15x
                self.advance()
                return coeff * self.power_suffix(Polynomial((0, 1)))
            return coeff
        if tok.kind == "x":
            self.advance()
            return Polynomial((0, 1))
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.expr()
            closing = self.peek()
            if not (closing.kind == "op" and closing.text == ")"):
                raise ParseError("expected ')'", closing.pos)
            self.advance()
            return inner
        raise ParseError(f"expected a term, found {tok.text!r}" if tok.kind != "end" else "unexpected end of input", tok.pos)


def parse_polynomial(text: str) -> Polynomial:
    """Exact polynomial from an expression like ``x^3 - 15*x + 22``."""
    return _Parser(text).parse()


def render_polynomial(poly: Polynomial) -> str:
    """Canonical rendering; parse_polynomial(render_polynomial(p)) == p."""
    return str(poly)
