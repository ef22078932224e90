"""Cyclic quotient surface singularities ``1/d(a,b)``."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import ArgumentError, ParseError
from .exactmath import hj_expansion, mod_inverse
from .plumbing import PlumbingGraph


@dataclass(frozen=True)
class CyclicQuotient:
    """The germ of ``C^2/mu_d`` where a generator acts by ``(zeta^a x, zeta^b y)``.

    Exponents are reduced modulo ``d`` on construction, so negative
    exponents such as ``1/5(2,-1)`` are accepted.
    """
    d: int
    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ArgumentError(f"group order must be a positive integer, got {self.d!r}")
        a, b = self.a % self.d, self.b % self.d
        if self.d > 1 and math.gcd(self.d, math.gcd(a, b)) != 1:
            raise ArgumentError(f"action of 1/{self.d}({self.a},{self.b}) is not faithful")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def parse(cls, text: str) -> "CyclicQuotient":
        m = re.fullmatch(r"\s*1\s*/\s*(\d+)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*", text)
        if not m:
            raise ParseError("expected 1/d(a,b)", text, 0)
        return cls(int(m.group(1)), int(m.group(2)), int(m.group(3)))

    @property
    def is_smooth(self) -> bool:
        return normalize(self).d == 1

    def order(self) -> int:
        return order(self)

    def __str__(self):
        return f"1/{self.d}({self.a},{self.b})"


@dataclass(frozen=True)
class NormalizedQuotient:
    """Canonical form ``1/d(1,q)``; the smooth point is ``d=1, q=0``."""
    d: int
    q: int

    def __post_init__(self):
        if self.d < 1:
            raise ArgumentError("d must be positive")
        if self.d == 1:
            if self.q != 0:
                raise ArgumentError("the smooth point is 1/1(1,0)")
        elif not (1 <= self.q < self.d and math.gcd(self.q, self.d) == 1):
            raise ArgumentError(f"need 1 <= q < d coprime to d, got 1/{self.d}(1,{self.q})")

    def as_cyclic(self) -> CyclicQuotient:
        return CyclicQuotient(self.d, 1 % self.d, self.q)

    def order(self) -> int:
        return self.d

    def dual(self) -> "NormalizedQuotient":
        """The same germ with the coordinates swapped, ``1/d(1, q^-1)``."""
        if self.d == 1:
            return self
        return NormalizedQuotient(self.d, mod_inverse(self.q, self.d))

    def __str__(self):
        return f"1/{self.d}(1,{self.q})"


def normalize(s) -> NormalizedQuotient:
    """Reduce ``1/d(a,b)`` to ``1/d'(1,q)``.

    A common factor ``g`` of ``d`` and ``b`` comes from a pseudo-reflection:
    ``1/d(a,b)`` is isomorphic to ``1/(d/g)(a, b/g)``.  The same is done for
    ``a`` and finally the action is rescaled by ``a^-1``.
    """
    if isinstance(s, NormalizedQuotient):
        return s
    d, a, b = s.d, s.a, s.b
    g = math.gcd(d, b)
    d, b = d // g, b // g
    a %= d
    g = math.gcd(d, a)
    d, a = d // g, a // g
    b %= d
    if d == 1:
        return NormalizedQuotient(1, 0)
    return NormalizedQuotient(d, b * mod_inverse(a, d) % d)


def resolve_bamboo(s) -> PlumbingGraph:
    n = normalize(s)
    if n.d == 1:
        raise ArgumentError("smooth point: nothing to resolve")
    return PlumbingGraph.bamboo(-b for b in hj_expansion(n.d, n.q))


def order(s) -> int:
    """Order of the local fundamental group, i.e. ``det(-A)`` of the bamboo.

    This is the ``d`` of the canonical form; it is smaller than the raw ``d``
    when the action contains pseudo-reflections.
    """
    return normalize(s).d
