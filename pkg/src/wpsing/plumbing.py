"""Decorated plumbing graphs of (partial) resolutions.

A vertex is an exceptional curve with its genus, a rational self-intersection
and the orders of the cyclic quotient points of the ambient surface lying on
it.  Edges carry rational intersection numbers, so graphs coming from
weighted blow-ups (orbifold intersection numbers) fit directly.

The determinant of the singularity is ``det(-A)`` times the product of all
annotated orders.  Each quotient point contributes its own small determinant,
which is what you get by splicing its resolution bamboo into the graph.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Optional

from .errors import ArgumentError, ConsistencyError, StateError
from .exactmath import as_rational, format_rational


def _order_of(p) -> int:
    # quotient points may be given as plain orders or as objects with .order()
    if hasattr(p, "order"):
        p = p.order()
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise ArgumentError(f"quotient point order must be a positive integer, got {p!r}")
    return p


@dataclass(frozen=True)
class Vertex:
    genus: int = 0
    self_intersection: Optional[Fraction] = None
    orders: tuple = ()
    contact: Fraction = Fraction(0)
    multiplicity: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ArgumentError(f"genus must be a nonnegative integer, got {self.genus!r}")
        if self.self_intersection is not None:
            object.__setattr__(self, "self_intersection", as_rational(self.self_intersection))
        object.__setattr__(self, "orders", tuple(_order_of(p) for p in self.orders))
        object.__setattr__(self, "contact", as_rational(self.contact))
        object.__setattr__(self, "multiplicity", as_rational(self.multiplicity))


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    intersection: Fraction = Fraction(1)

    def __post_init__(self):
        if self.u == self.v:
            raise ArgumentError("an edge must join two distinct vertices")
        i = as_rational(self.intersection)
        if i <= 0:
            raise ArgumentError(f"edge intersection must be positive, got {i}")
        object.__setattr__(self, "intersection", i)


@dataclass(frozen=True)
class LinkClassification:
    rank_H1: int
    torsion_order: int
    is_QHS: bool
    is_ZHS: bool

    def as_dict(self):
        return {"rank_H1": self.rank_H1, "torsion_order": self.torsion_order,
                "is_QHS": self.is_QHS, "is_ZHS": self.is_ZHS}


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple = ()
    edges: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        n = len(self.vertices)
        for e in self.edges:
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise ArgumentError(f"edge {e.u}-{e.v} refers to a missing vertex")

    @classmethod
    def bamboo(cls, self_intersections: Iterable, intersection=1) -> "PlumbingGraph":
        """Chain of rational curves with the given self-intersections."""
        selfs = list(self_intersections)
        verts = [Vertex(self_intersection=s) for s in selfs]
        edges = [Edge(i, i + 1, intersection) for i in range(len(selfs) - 1)]
        return cls(verts, edges)

    def __len__(self):
        return len(self.vertices)

    def total_order(self) -> int:
        out = 1
        for v in self.vertices:
            for p in v.orders:
                out *= p
        return out

    # -- JSON ------------------------------------------------------------

    def to_dict(self) -> dict:
        verts = []
        for v in self.vertices:
            verts.append({
                "genus": v.genus,
                "self": None if v.self_intersection is None else format_rational(v.self_intersection),
                "orders": list(v.orders),
                "contact": format_rational(v.contact),
                "mult": format_rational(v.multiplicity),
            })
        edges = [{"u": e.u, "v": e.v, "i": format_rational(e.intersection)} for e in self.edges]
        return {"vertices": verts, "edges": edges}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data) -> "PlumbingGraph":
        if not isinstance(data, dict) or "vertices" not in data:
            raise ArgumentError("graph JSON needs a 'vertices' list")
        try:
            verts = []
            for v in data["vertices"]:
                s = v.get("self")
                verts.append(Vertex(
                    genus=int(v.get("genus", 0)),
                    self_intersection=None if s is None or s == "?" else as_rational(str(s)),
                    orders=tuple(int(p) for p in v.get("orders", ())),
                    contact=as_rational(str(v.get("contact", 0))),
                    multiplicity=as_rational(str(v.get("mult", 1))),
                ))
            edges = [Edge(int(e["u"]), int(e["v"]), as_rational(str(e.get("i", 1))))
                     for e in data.get("edges", ())]
        except (KeyError, TypeError, AttributeError) as exc:
            raise ArgumentError(f"malformed graph JSON: {exc}") from exc
        return cls(verts, edges)

    @classmethod
    def from_json(cls, text: str) -> "PlumbingGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ArgumentError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)


def intersection_matrix(g: PlumbingGraph) -> list[list[Fraction]]:
    n = len(g.vertices)
    A = [[Fraction(0)] * n for _ in range(n)]
    for i, v in enumerate(g.vertices):
        if v.self_intersection is None:
            raise StateError(f"self-intersection of vertex {i} is unknown")
        A[i][i] = v.self_intersection
    for e in g.edges:
        A[e.u][e.v] += e.intersection
        A[e.v][e.u] += e.intersection
    return A


def leading_minors(A) -> list[Fraction]:
    """All leading principal minors in one elimination pass without pivoting.

    The k-th minor is the product of the first k pivots; elimination stops
    at the first zero pivot and the remaining minors are not computed.
    """
    M = [[as_rational(x) for x in row] for row in A]
    n = len(M)
    minors, prod = [], Fraction(1)
    for k in range(n):
        piv = M[k][k]
        prod *= piv
        minors.append(prod)
        if piv == 0:
            break
        for i in range(k + 1, n):
            f = M[i][k] / piv
            if f:
                row_i, row_k = M[i], M[k]
                for j in range(k + 1, n):
                    row_i[j] -= f * row_k[j]
    return minors


def is_negative_definite(A) -> bool:
    """Leading principal minors of ``A`` alternate in sign, starting negative."""
    minors = leading_minors(A)
    if len(minors) < len(A):
        return False
    return all(m != 0 and (m > 0) == (k % 2 == 0) for k, m in enumerate(minors, 1))


def det_singularity(g: PlumbingGraph) -> int:
    """``det(-A)`` times the orders of all annotated quotient points.

    Raises :class:`ConsistencyError` when the matrix is not negative definite
    or the product is not a positive integer.
    """
    A = intersection_matrix(g)
    if not is_negative_definite(A):
        raise ConsistencyError("intersection matrix is not negative definite")
    minors = leading_minors(A)
    value = (minors[-1] if len(A) % 2 == 0 else -minors[-1]) if minors else Fraction(1)
    value *= g.total_order()
    if value.denominator != 1 or value <= 0:
        raise ConsistencyError(f"determinant {value} is not a positive integer")
    return int(value)


def solve_self_intersections(g: PlumbingGraph) -> PlumbingGraph:
    """Fill in self-intersections from the pullback relations ``E_v . pi^*Y = 0``.

    For each vertex ``N_v * E_v^2 + sum_u N_u (E_u . E_v) + contact_v = 0``.
    """
    n = len(g.vertices)
    off = [Fraction(0)] * n
    for e in g.edges:
        off[e.u] += g.vertices[e.v].multiplicity * e.intersection
        off[e.v] += g.vertices[e.u].multiplicity * e.intersection
    verts = []
    for i, v in enumerate(g.vertices):
        if v.multiplicity == 0:
            raise ArgumentError(f"vertex {i} has multiplicity 0")
        verts.append(replace(v, self_intersection=-(v.contact + off[i]) / v.multiplicity))
    return PlumbingGraph(verts, g.edges)


def _components(n: int, edges) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        parent[find(e.u)] = find(e.v)
    return len({find(i) for i in range(n)})


def cycle_rank(g: PlumbingGraph) -> int:
    n = len(g.vertices)
    return len(g.edges) - n + _components(n, g.edges)


def classify_link(g: PlumbingGraph) -> LinkClassification:
    """Rank of ``H_1`` of the link and the homology-sphere flags.

    ``torsion_order`` is the determinant of the singularity; for a tree this is
    the order of the torsion of ``H_1``.
    """
    det = det_singularity(g)
    rank = 2 * sum(v.genus for v in g.vertices) + cycle_rank(g)
    qhs = rank == 0
    return LinkClassification(rank, det, qhs, qhs and det == 1)
