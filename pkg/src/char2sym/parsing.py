"""Text input for scalars, polynomials, and factored polynomials.

Grammar (whitespace ignored, case-insensitive variable names)::

    expr     := term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := atom ('^' ['-'] int)?
    atom     := 'x' | 't' | int | '(' expr ')'

'-' is a synonym for '+' (characteristic two).  Integers denote
bit-packed base-field elements; 't' is only meaningful over a rational
function field.  '/' requires exact divisibility, which for degree-zero
operands is ordinary scalar division and therefore builds fractions
like ``(t^2+1)/(t)``.

Factored input is a product of parenthesized monic polynomials with
optional positive integer exponents: ``(x^2+x+t)^3 * (x+1)``.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .fields import RationalFunctionField, Scalar
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z])|([-+*/^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos}")
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("name", m.group(2).lower()))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, field, text: str):
        self.field = field
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, value = self.take()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def done(self):
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")

    # -- expression grammar ------------------------------------------------

    def expr(self) -> Poly:
        while self.peek() == ("op", "-"):  # unary minus: identity
            self.take()
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            self.take()
            value = value + self.term()
        return value

    def term(self) -> Poly:
        value = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero:
                    raise ParseError("division by zero")
                quo, rem = divmod(value, rhs)
                if not rem.is_zero:
                    raise ParseError(
                        f"inexact polynomial division in {self.text!r}"
                    )
                value = quo
        return value

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek() != ("op", "^"):
            return base
        self.take()
        negative = False
        if self.peek() == ("op", "-"):
            negative = True
            self.take()
        kind, e = self.take()
        if kind != "int":
            raise ParseError(f"expected integer exponent in {self.text!r}")
        if not negative:
            return base**e
        if base.degree != 0 or base.is_zero:
            raise ParseError("negative exponent needs a nonzero scalar base")
        inv = base.coeff(0).inverse()
        return Poly.constant(inv**e)

    def atom(self) -> Poly:
        kind, value = self.take()
        if kind == "int":
            return Poly(self.field, (self.field.coerce(value),))
        if kind == "name":
            if value == "x":
                return Poly.x(self.field)
            if value == "t":
                if not isinstance(self.field, RationalFunctionField):
                    raise ParseError(f"'t' is not an element of {self.field}")
                return Poly.constant(self.field.t())
            raise ParseError(f"unknown symbol {value!r}")
        if (kind, value) == ("op", "("):
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token in {self.text!r}")

    # -- factored grammar ----------------------------------------------------

    def factored(self) -> list[tuple[Poly, int]]:
        out = [self.factored_atom()]
        while self.peek() == ("op", "*"):
            self.take()
            out.append(self.factored_atom())
        return out

    def factored_atom(self) -> tuple[Poly, int]:
        self.expect_op("(")
        base = self.expr()
        self.expect_op(")")
        mult = 1
        if self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "int" or e < 1:
                raise ParseError("factor exponent must be a positive integer")
            mult = e
        return base, mult


def parse_poly(field, text: str) -> Poly:
    parser = _Parser(field, text)
    value = parser.expr()
    parser.done()
    return value


def parse_scalar(field, text: str) -> Scalar:
    p = parse_poly(field, text)
    if p.degree > 0:
        raise ParseError(f"{text!r} is not a scalar (contains x)")
    return p.coeff(0)


def parse_factored(field, text: str) -> list[tuple[Poly, int]]:
    stripped = text.strip()
    if not stripped.startswith("("):
        return [(parse_poly(field, stripped), 1)]
    parser = _Parser(field, stripped)
    out = parser.factored()
    parser.done()
    return out
