"""Words in free groups and finitely presented groups.

A word is a tuple of syllables ``(generator index, nonzero exponent)`` in
freely reduced form: adjacent syllables never share a generator.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import ArgumentError, ParseError

Word = tuple  # tuple[tuple[int, int], ...]


def reduce_word(syllables: Iterable) -> Word:
    """Freely reduce a sequence of ``(gen, exp)`` pairs."""
    out: list[list[int]] = []
    for g, e in syllables:
        g, e = int(g), int(e)
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out)


def gen(i: int, e: int = 1) -> Word:
    return reduce_word([(i, e)])


def word_mul(*words: Word) -> Word:
    return reduce_word(s for w in words for s in w)


def word_inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def word_power(w: Word, n: int) -> Word:
    if n < 0:
        w, n = word_inverse(w), -n
    return reduce_word(s for _ in range(n) for s in w) if n else ()


def commutator(x: Word, y: Word) -> Word:
    """``[x, y] = x^-1 y^-1 x y``."""
    return word_mul(word_inverse(x), word_inverse(y), x, y)


def conjugate(x: Word, y: Word) -> Word:
    """``x^y = y^-1 x y``."""
    return word_mul(word_inverse(y), x, y)


def word_length(w: Word) -> int:
    return sum(abs(e) for _, e in w)


def letters(w: Word) -> list[tuple[int, int]]:
    """Expand into single letters ``(gen, +1 | -1)``."""
    return [(g, 1 if e > 0 else -1) for g, e in w for _ in range(abs(e))]


def exponent_sums(w: Word, ngens: int) -> list[int]:
    row = [0] * ngens
    for g, e in w:
        row[g] += e
    return row


def format_word(w: Word, names: Sequence[str]) -> str:
    if not w:
        return "1"
    return "*".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in w)


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        gens = tuple(str(g) for g in self.generators)
        if len(set(gens)) != len(gens):
            raise ArgumentError(f"repeated generator names in {gens}")
        for g in gens:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", g):
                raise ArgumentError(f"invalid generator name {g!r}")
        rels = []
        for r in self.relators:
            r = reduce_word(r)
            if any(not 0 <= g < len(gens) for g, _ in r):
                raise ArgumentError(f"relator {r!r} uses an unknown generator index")
            rels.append(r)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def word(self, text: str) -> Word:
        """Parse a word (or relation ``lhs = rhs``) over these generators."""
        parser = _WordParser(text, self.generators)
        rels = parser.relation()
        if parser.peek()[0] != "end":
            parser.error("trailing input")
        if len(rels) != 1:
            raise ParseError("expected a single word", text, 0)
        return rels[0]

    def with_relators(self, extra: Iterable[Word]) -> "GroupPresentation":
        return GroupPresentation(self.generators, self.relators + tuple(extra))

    def __str__(self):
        gens = ", ".join(self.generators)
        rels = ", ".join(format_word(r, self.generators) for r in self.relators)
        return f"< {gens} | {rels} >" if rels else f"< {gens} | >"


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(-?\d+)|([<>|,*^()\[\]=]))")


def _tokenize(text: str):
    pos, out = 0, []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("name", m.group(1), start))
        elif m.group(2):
            out.append(("int", int(m.group(2)), start))
        else:
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _WordParser:
    """Grammar::

        pres     := '<' names '|' [relation (',' relation)*] '>'
        relation := word ('=' word)*
        word     := factor (['*'] factor)*
        factor   := atom ('^' INT)*
        atom     := NAME | '1' | '(' word ')' | '[' word ',' word ']'

    ``a = b`` stands for the relator ``a b^-1``.  A name that is not a
    generator is read letter by letter when every letter is one (``sts``).
    """

    def __init__(self, text: str, generators=None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.gens = list(generators) if generators is not None else None

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def is_op(self, op, tok=None):
        tok = tok or self.peek()
        return tok[0] == "op" and tok[1] == op

    def expect(self, op):
        tok = self.take()
        if not self.is_op(op, tok):
            self.error(f"expected {op!r}", tok)

    def presentation(self) -> GroupPresentation:
        self.expect("<")
        names = []
        while True:
            tok = self.take()
            if tok[0] != "name":
                self.error("expected a generator name", tok)
            if tok[1] in names:
                self.error(f"repeated generator {tok[1]!r}", tok)
            names.append(tok[1])
            if self.is_op(","):
                self.take()
                continue
            break
        self.expect("|")
        self.gens = names
        rels = []
        if not self.is_op(">"):
            while True:
                rels.extend(self.relation())
                if self.is_op(","):
                    self.take()
                    continue
                break
        self.expect(">")
        if self.peek()[0] != "end":
            self.error("trailing input")
        return GroupPresentation(tuple(names), tuple(rels))

    def relation(self) -> list[Word]:
        sides = [self.word()]
        while self.is_op("="):
            self.take()
            sides.append(self.word())
        if len(sides) == 1:
            return [sides[0]]
        return [word_mul(a, word_inverse(b)) for a, b in zip(sides, sides[1:])]

    def starts_atom(self):
        tok = self.peek()
        return tok[0] == "name" or (tok[0] == "int" and tok[1] == 1) or self.is_op("(") or self.is_op("[")

    def word(self) -> Word:
        if not self.starts_atom():
            self.error("expected a word")
        parts = [self.factor()]
        while True:
            if self.is_op("*"):
                self.take()
                parts.append(self.factor())
            elif self.starts_atom():
                parts.append(self.factor())
            else:
                return word_mul(*parts)

    def factor(self) -> Word:
        w = self.atom()
        while self.is_op("^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be an integer", tok)
            w = word_power(w, tok[1])
        return w

    def atom(self) -> Word:
        tok = self.take()
        if tok[0] == "name":
            return self.name(tok)
        if tok[0] == "int" and tok[1] == 1:
            return ()
        if self.is_op("(", tok):
            w = self.word()
            self.expect(")")
            return w
        if self.is_op("[", tok):
            x = self.word()
            self.expect(",")
            y = self.word()
            self.expect("]")
            return commutator(x, y)
        self.error("expected a generator, '1', '(' or '['", tok)

    def name(self, tok) -> Word:
        name = tok[1]
        if self.gens is None:
            self.error("no generators declared", tok)
        if name in self.gens:
            return gen(self.gens.index(name))
        if all(ch in self.gens for ch in name):
            return word_mul(*(gen(self.gens.index(ch)) for ch in name))
        self.error(f"unknown generator {name!r}", tok)


def parse_presentation(text: str) -> GroupPresentation:
    """Parse ``"< a, b | a^2, b^3, (a*b)^5 >"``."""
    return _WordParser(text).presentation()
