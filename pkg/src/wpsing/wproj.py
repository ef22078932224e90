"""Weighted projective planes and weighted blow-ups of C^3.

Points of the exceptional divisor ``E_w`` of a weighted blow-up are handled
symbolically: the plane is cut into seven point classes (the open torus, the
three open axes and the three vertices) and every stratum is a union of
classes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ArgumentError
from .exactmath import pairwise_coprime
from .quotientsing import CyclicQuotient

POINT_CLASSES = ("torus", "Xcheck", "Ycheck", "Zcheck", "Px", "Py", "Pz")
STRATUM_LABELS = ("T", "Lx", "Ly", "Lz", "Px", "Py", "Pz")


def _positive_triple(values, what="weight") -> tuple[int, int, int]:
    t = tuple(values)
    if len(t) != 3 or any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in t):
        raise ArgumentError(f"{what} must be three positive integers, got {values!r}")
    return t


@dataclass(frozen=True)
class Weight3:
    e1: int
    e2: int
    e3: int

    def __post_init__(self):
        _positive_triple((self.e1, self.e2, self.e3))
        if math.gcd(self.e1, math.gcd(self.e2, self.e3)) != 1:
            raise ArgumentError(f"weight {self.as_tuple()} has gcd > 1")

    @classmethod
    def parse(cls, text: str) -> "Weight3":
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError as exc:
            raise ArgumentError(f"weight must look like e1,e2,e3: {text!r}") from exc
        if len(parts) != 3:
            raise ArgumentError(f"weight must have three entries: {text!r}")
        return cls(*parts)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.e1, self.e2, self.e3)

    def __iter__(self):
        return iter(self.as_tuple())

    def __str__(self):
        return "({},{},{})".format(*self.as_tuple())


def _as_weight(w) -> Weight3:
    return w if isinstance(w, Weight3) else Weight3(*w)


@dataclass(frozen=True)
class WeightNormalization:
    d1: int
    d2: int
    d3: int
    alpha1: int
    alpha2: int
    alpha3: int

    @property
    def d(self) -> tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)

    @property
    def alpha(self) -> tuple[int, int, int]:
        return (self.alpha1, self.alpha2, self.alpha3)


def normalize_weight(w) -> WeightNormalization:
    """``d_k = gcd(e_i, e_j)`` and ``alpha_k = e_k / (d_i d_j)``.

    ``P^2_w`` is isomorphic to ``P^2_alpha`` through
    ``[x:y:z] -> [x^d1 : y^d2 : z^d3]``, and the ``alpha_k`` are pairwise coprime.
    """
    e1, e2, e3 = _as_weight(w).as_tuple()
    d1, d2, d3 = math.gcd(e2, e3), math.gcd(e1, e3), math.gcd(e1, e2)
    return WeightNormalization(d1, d2, d3, e1 // (d2 * d3), e2 // (d1 * d3), e3 // (d1 * d2))


def vertex_singularities(eta) -> tuple[CyclicQuotient, CyclicQuotient, CyclicQuotient]:
    """Germs of ``P^2_eta`` at ``P_x, P_y, P_z``; ``1/1(0,0)`` marks a smooth vertex."""
    a1, a2, a3 = _positive_triple(eta)
    if not pairwise_coprime((a1, a2, a3)):
        raise ArgumentError(f"weight {eta!r} is not pairwise coprime")
    return (CyclicQuotient(a1, a2, a3), CyclicQuotient(a2, a1, a3), CyclicQuotient(a3, a1, a2))


def bezout(deg1: int, deg2: int, w) -> Fraction:
    if deg1 < 0 or deg2 < 0:
        raise ArgumentError("degrees must be nonnegative")
    e1, e2, e3 = _as_weight(w).as_tuple()
    return Fraction(deg1 * deg2, e1 * e2 * e3)


def quasi_smooth_genus(deg_eta: int, eta) -> Fraction:
    """Genus of a quasi-smooth curve of degree ``deg_eta`` in ``P^2_eta``."""
    a1, a2, a3 = _positive_triple(eta)
    return Fraction(deg_eta * (deg_eta - a1 - a2 - a3), 2 * a1 * a2 * a3) + 1


# --------------------------------------------------------------------------
# Stratification of the exceptional divisor of a weighted blow-up

@dataclass(frozen=True)
class QuotientGerm3:
    """A 3-dimensional cyclic quotient ``1/d(a,b,c)`` (exponents mod d)."""
    d: int
    exponents: tuple

    def __str__(self):
        return "1/{}({})".format(self.d, ",".join(str(x) for x in self.exponents))


@dataclass(frozen=True)
class Stratum:
    label: str
    members: frozenset
    transverse: Optional[object] = None   # germ attached to the stratum

    @property
    def is_empty(self) -> bool:
        return not self.members


def _axis_stratum(i: int, e: tuple) -> tuple[frozenset, CyclicQuotient]:
    # axis opposite to coordinate i, passing through the other two vertices
    j, k = [t for t in range(3) if t != i]
    names = "xyz"
    di = math.gcd(e[j], e[k])
    open_axis = {names[i].upper() + "check"}
    germ = CyclicQuotient(di, e[i], -1) if di > 1 else CyclicQuotient(1, 0, 0)
    if di == 1:
        return frozenset(), germ
    pj, pk = "P" + names[j], "P" + names[k]
    if di == e[j] and di == e[k]:
        return frozenset(open_axis | {pj, pk}), germ
    if di == e[j]:
        return frozenset(open_axis | {pj}), germ
    if di == e[k]:
        return frozenset(open_axis | {pk}), germ
    return frozenset(open_axis), germ


def stratify(w) -> dict[str, Stratum]:
    """Strata ``T, Lx, Ly, Lz, Px, Py, Pz`` of ``E_w`` as sets of point classes.

    ``L_x`` carries the transverse germ ``1/d1(e1,-1)`` (times a smooth line)
    and ``P_x`` the germ ``1/e1(-1,e2,e3)``; analogously for the others.
    """
    e = _as_weight(w).as_tuple()
    names = "xyz"
    out = {}
    T = {"torus"}
    for i in range(3):
        j, k = [t for t in range(3) if t != i]
        if math.gcd(e[j], e[k]) == 1:
            T.add(names[i].upper() + "check")
        if e[i] == 1:
            T.add("P" + names[i])
    out["T"] = Stratum("T", frozenset(T))
    for i in range(3):
        members, germ = _axis_stratum(i, e)
        out["L" + names[i]] = Stratum("L" + names[i], members, germ)
    for i in range(3):
        j, k = [t for t in range(3) if t != i]
        exps = [e[0], e[1], e[2]]
        exps[i] = -1
        germ = QuotientGerm3(e[i], tuple(x % e[i] for x in exps))
        empty = e[j] % e[i] == 0 or e[k] % e[i] == 0
        out["P" + names[i]] = Stratum("P" + names[i], frozenset() if empty else frozenset({"P" + names[i]}), germ)
    return out


def point_stratum(w, point_class: str) -> str:
    """Label of the unique stratum containing a point class."""
    if point_class not in POINT_CLASSES:
        raise ArgumentError(f"unknown point class {point_class!r}")
    hits = [lab for lab, s in stratify(w).items() if point_class in s.members]
    if len(hits) != 1:
        raise ArgumentError(f"{point_class} lies in {len(hits)} strata for weight {tuple(w)}")
    return hits[0]


# --------------------------------------------------------------------------
# Weighted Cremona data

def validate_cremona(alpha, beta) -> tuple[tuple[int, int, int], tuple[int, int]]:
    """Check ``alpha`` pairwise coprime and ``a1 b1 + a2 b2 = a1 a2 + a3``."""
    a = _positive_triple(alpha, "alpha")
    b = tuple(beta)
    if len(b) != 2 or any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in b):
        raise ArgumentError(f"beta must be two positive integers, got {beta!r}")
    if not pairwise_coprime(a):
        raise ArgumentError(f"alpha {a} is not pairwise coprime")
    if a[0] * b[0] + a[1] * b[1] != a[0] * a[1] + a[2]:
        raise ArgumentError(f"alpha={a}, beta={b} violate a1*b1 + a2*b2 = a1*a2 + a3")
    return a, b


def cremona_betas(alpha) -> list[tuple[int, int]]:
    """All positive ``(b1, b2)`` with ``a1 b1 + a2 b2 = a1 a2 + a3``."""
    a1, a2, a3 = _positive_triple(alpha, "alpha")
    total = a1 * a2 + a3
    return [(b1, (total - a1 * b1) // a2) for b1 in range(1, total // a1 + 1)
            if total - a1 * b1 > 0 and (total - a1 * b1) % a2 == 0]
