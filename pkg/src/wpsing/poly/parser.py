"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := '-' unary | power
    power  := atom ['^' INT]
    atom   := INT | 'zeta' | VAR | '(' expr ')'

Variables are ``x, y, z`` and optionally ``w``.  Division is only allowed by
constants, so ``3/2*x`` and ``x/2`` both work.
"""
from __future__ import annotations

import re

from ..errors import ParseError
from .field import ZETA
from .multipoly import VAR_NAMES, MultiPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|(zeta|[xyzw])|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.text = text
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.error(f"expected {op!r}", tok)

    def parse(self) -> MultiPoly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token")
        return result

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                result = result + rhs if tok[1] == "+" else result - rhs
            else:
                return result

    def term(self):
        result = self.unary()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "*/":
                self.take()
                rhs = self.unary()
                if tok[1] == "*":
                    result = result * rhs
                else:
                    c = rhs.constant_value()
                    if c is None:
                        self.error("division by a non-constant", tok)
                    if not c:
                        self.error("division by zero", tok)
                    result = result / c
            else:
                return result

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "int":
                self.error("exponent must be a nonnegative integer", exp)
            if exp[1] > 2 ** 63 - 1:
                self.error("exponent exceeds 64 bits", exp)
            return base ** exp[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return MultiPoly.constant(val, self.nvars)
        if kind == "name":
            if val == "zeta":
                return MultiPoly.constant(ZETA, self.nvars)
            idx = VAR_NAMES.index(val)
            if idx >= self.nvars:
                self.error(f"variable {val!r} needs {idx + 1} variables", tok)
            return MultiPoly.var(idx, self.nvars)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.error("expected a number, variable or '('", tok)


def parse_poly(text: str, nvars: int | None = None) -> MultiPoly:
    """Parse ``text``; uses 4 variables when ``w`` appears, else 3."""
    if nvars is None:
        nvars = 4 if re.search(r"(?<![a-z])w(?![a-z])", text) else 3
    return _Parser(text, nvars).parse()
