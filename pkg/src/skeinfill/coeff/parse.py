"""Recursive-descent parser for the coefficient expression language.

    top    := expr ('/' expr)?
    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := int ('/' posint)? | var ('^' signed-int)? | '(' expr ')'
    var    := 'A' | 'm' | 'm2'

Whitespace is ignored.  Which variables are legal depends on the target:
scalars over Q(A) accept ``A``; scalars over Q(A)(m2) accept ``A`` and
``m2``; polynomials over either field additionally accept ``m``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .field import Field, FieldTag
from .poly import Poly
from .ratfunc import CoeffZeroDivision


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.message = message
        super().__init__(f"{message} at line {self.line}, column {self.column}")


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            toks.append(_Tok("end", "", pos))
            return toks
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()


class _ScalarCtx:
    def __init__(self, field: Field):
        self.field = field

    def const(self, c: Fraction):
        return self.field.coerce(c)

    def var(self, name: str, exp: int):
        if name == "A":
            return self.field.apow(exp)
        if name == "m2" and self.field.tag is FieldTag.EXTENDED:
            return self.field.m2() ** exp
        return None

    def divide(self, a, b):
        return a / b


class _PolyCtx:
    def __init__(self, field: Field, var: str):
        self.field, self.pvar = field, var

    def const(self, c: Fraction):
        return Poly.constant(self.field, c, self.pvar)

    def var(self, name: str, exp: int):
        if name == "A":
            return Poly.constant(self.field, self.field.apow(exp), self.pvar)
        if name == "m2" and self.field.tag is FieldTag.EXTENDED:
            return Poly.constant(self.field, self.field.m2() ** exp, self.pvar)
        if name == self.pvar:
            if exp < 0:
                raise ValueError(f"negative power of {name}")
            return Poly.monomial(self.field, exp, 1, self.pvar)
        return None

    def divide(self, a: Poly, b: Poly):
        if not b.is_constant():
            raise ValueError("division by a non-constant polynomial")
        return a.scale(1 / b.leading())


class _Parser:
    def __init__(self, text: str, ctx):
        self.text, self.ctx = text, ctx
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok.pos)

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.kind != "op" or t.text != text:
            self.error(f"expected {text!r}, found {t.text or 'end of input'!r}")
        return self.take()

    def top(self):
        value = self.expr()
        t = self.peek()
        if t.kind == "op" and t.text == "/":
            self.take()
            divisor = self.expr()
            try:
                value = self.ctx.divide(value, divisor)
            except CoeffZeroDivision:
                self.error("division by zero", t)
            except ValueError as exc:
                self.error(str(exc), t)
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return value

    def expr(self):
        neg = False
        t = self.peek()
        if t.kind == "op" and t.text in "+-":
            self.take()
            neg = t.text == "-"
        value = self.term()
        if neg:
            value = -value
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if t.text == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        t = self.take()
        if t.kind == "int":
            num = int(t.text)
            if self.peek().kind == "op" and self.peek().text == "/" and self.peek(1).kind == "int":
                self.take()
                d = self.take()
                if int(d.text) == 0:
                    self.error("zero denominator in rational literal", d)
                return self.ctx.const(Fraction(num, int(d.text)))
            return self.ctx.const(Fraction(num))
        if t.kind == "name":
            exp = 1
            if self.peek().kind == "op" and self.peek().text == "^":
                self.take()
                sign = 1
                s = self.peek()
                if s.kind == "op" and s.text in "+-":
                    self.take()
                    sign = -1 if s.text == "-" else 1
                e = self.peek()
                if e.kind != "int":
                    self.error("expected integer exponent", e)
                self.take()
                exp = sign * int(e.text)
            try:
                value = self.ctx.var(t.text, exp)
            except ValueError as exc:
                self.error(str(exc), t)
            except CoeffZeroDivision:
                self.error("division by zero", t)
            if value is None:
                self.error(f"unknown variable {t.text!r}", t)
            return value
        if t.kind == "op" and t.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        self.error(f"unexpected {t.text or 'end of input'!r}", t)


def parse_scalar(text: str, field: Field):
    """Parse a coefficient-field value (Q(A) or Q(A)(m2))."""
    return _Parser(text, _ScalarCtx(field)).top()


def parse_poly(text: str, field: Field, var: str = "m") -> Poly:
    """Parse a polynomial in ``var`` with coefficients in ``field``."""
    return _Parser(text, _PolyCtx(field, var)).top()
