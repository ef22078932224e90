"""Brieskorn-Pham surfaces ``x^n1 + y^n2 + z^n3 = 0`` and a family of
complete intersections in C^4 with integral homology sphere links.

Both determinants are computed twice: from closed formulas and from the
plumbing graph of a partial resolution.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ArgumentError, ConsistencyError
from .exactmath import format_rational, gcd_many, lcm_many, pairwise_coprime
from .plumbing import Edge, PlumbingGraph, Vertex, det_singularity, solve_self_intersections


@dataclass(frozen=True)
class BPAnalysis:
    exponents: tuple
    e: int
    alpha: tuple
    dd: tuple
    weight: tuple
    degree: int
    exceptional_genus: int
    det: int
    is_QHS: bool
    is_ZHS: bool
    is_smooth: bool

    def as_dict(self):
        return {
            "exponents": list(self.exponents), "e": self.e, "alpha": list(self.alpha),
            "d": list(self.dd), "weight": list(self.weight), "degree": self.degree,
            "genus": self.exceptional_genus, "det": self.det, "qhs": self.is_QHS,
            "zhs": self.is_ZHS, "smooth": self.is_smooth,
        }


def _check_exponents(n) -> tuple[int, int, int]:
    n = tuple(n)
    if len(n) != 3 or any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in n):
        raise ArgumentError(f"need three positive exponents, got {n!r}")
    return n


def _bp_constants(n1, n2, n3):
    e = gcd_many([n1, n2, n3])
    a1, a2, a3 = math.gcd(n2, n3) // e, math.gcd(n1, n3) // e, math.gcd(n1, n2) // e
    d1, d2, d3 = n1 // (e * a2 * a3), n2 // (e * a1 * a3), n3 // (e * a1 * a2)
    return e, (a1, a2, a3), (d1, d2, d3)


def bp_graph(n1: int, n2: int, n3: int) -> PlumbingGraph:
    """One-vertex graph of the weighted blow-up: the exceptional curve meets
    each axis in ``e*alpha_i`` quotient points of order ``d_i``."""
    e, (a1, a2, a3), (d1, d2, d3) = _bp_constants(n1, n2, n3)
    w = (a1 * d2 * d3, a2 * d1 * d3, a3 * d1 * d2)
    deg = n1 * n2 * n3 // (e * e * a1 * a2 * a3)
    genus = (e * e * a1 * a2 * a3 - e * (a1 + a2 + a3) + 2) // 2
    orders = (d1,) * (e * a1) + (d2,) * (e * a2) + (d3,) * (e * a3)
    selfint = -Fraction(deg, w[0] * w[1] * w[2])
    return PlumbingGraph([Vertex(genus, selfint, orders)], [])


def bp_analyze(n1: int, n2: int, n3: int) -> BPAnalysis:
    n1, n2, n3 = _check_exponents((n1, n2, n3))
    e, alpha, dd = _bp_constants(n1, n2, n3)
    a1, a2, a3 = alpha
    d1, d2, d3 = dd
    weight = (a1 * d2 * d3, a2 * d1 * d3, a3 * d1 * d2)
    degree = n1 * n2 * n3 // (e * e * a1 * a2 * a3)
    twice_genus = e * e * a1 * a2 * a3 - e * (a1 + a2 + a3) + 2
    if twice_genus % 2 or twice_genus < 0:
        raise ConsistencyError(f"genus {Fraction(twice_genus, 2)} is not a nonnegative integer")
    det = e * d1 ** (e * a1 - 1) * d2 ** (e * a2 - 1) * d3 ** (e * a3 - 1)
    qhs = (alpha == (1, 1, 1) and e == 2) or (e == 1 and sorted(alpha)[:2] == [1, 1])
    return BPAnalysis(
        exponents=(n1, n2, n3), e=e, alpha=alpha, dd=dd, weight=weight, degree=degree,
        exceptional_genus=twice_genus // 2, det=det, is_QHS=qhs,
        is_ZHS=pairwise_coprime((n1, n2, n3)), is_smooth=min(n1, n2, n3) == 1,
    )


def bp_consistency(n1: int, n2: int, n3: int) -> bool:
    """The unsimplified determinant expression equals the simplified one."""
    n1, n2, n3 = _check_exponents((n1, n2, n3))
    e, (a1, a2, a3), (d1, d2, d3) = _bp_constants(n1, n2, n3)
    degree = n1 * n2 * n3 // (e * e * a1 * a2 * a3)
    raw = Fraction(degree, (d1 * d2 * d3) ** 2 * a1 * a2 * a3) * (d1 ** a1 * d2 ** a2 * d3 ** a3) ** e
    return raw == e * d1 ** (e * a1 - 1) * d2 ** (e * a2 - 1) * d3 ** (e * a3 - 1)


# --------------------------------------------------------------------------
# Complete intersections  x1^n1 - x0^n0 + f2 = f2 + f3 = 0  in C^4

@dataclass(frozen=True)
class Family4Input:
    n: tuple                 # (n0, n1, n2, n3)
    b2: tuple = (0, 0)       # (b20, b21)
    b3: tuple = (0, 0, 0)    # (b30, b31, b32)

    def __post_init__(self):
        n = tuple(self.n)
        if len(n) != 4 or any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in n):
            raise ArgumentError(f"need four positive exponents, got {self.n!r}")
        b2, b3 = tuple(self.b2), tuple(self.b3)
        if len(b2) != 2 or len(b3) != 3 or any(not isinstance(x, int) or x < 0 for x in b2 + b3):
            raise ArgumentError("b2 needs two and b3 three nonnegative integers")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "b2", b2)
        object.__setattr__(self, "b3", b3)

    @property
    def coprime(self) -> bool:
        return pairwise_coprime(self.n)


@dataclass(frozen=True)
class Family4Analysis:
    input: Family4Input
    b: int
    m: int
    b2p: int
    b3p: int
    N1: int
    N2: int
    det_closed: int
    det_general: int
    is_ZHS: bool
    genus_E1_components: Fraction
    n_E1_components: int
    genus_E2: Fraction
    dq_checks: dict = field(default_factory=dict)

    @property
    def genera_integral(self) -> bool:
        """False when the genus formulas give a non-integer (inconsistent data)."""
        return all(g.denominator == 1 and g >= 0
                   for g in (self.genus_E1_components, self.genus_E2))

    def a1(self, dq) -> Fraction:
        return Fraction(self.N2) / (self.N1 * dq)

    def a2(self, dq) -> Fraction:
        return (self.m + Fraction(self.N1) / dq) / self.N2

    def graph(self, dq) -> PlumbingGraph:
        return family4_graph(self.input, dq)

    def as_dict(self):
        return {
            "n": list(self.input.n), "b2": list(self.input.b2), "b3": list(self.input.b3),
            "b": self.b, "m": self.m, "b2p": self.b2p, "b3p": self.b3p,
            "N1": self.N1, "N2": self.N2, "det": self.det_closed, "det_general": self.det_general,
            "zhs": self.is_ZHS, "genus_E1": format_rational(self.genus_E1_components),
            "E1_components": self.n_E1_components, "genus_E2": format_rational(self.genus_E2),
            "genera_integral": self.genera_integral,
            "dq_checks": {str(k): v for k, v in sorted(self.dq_checks.items())},
        }


def _family4_basics(inp: Family4Input):
    n0, n1, n2, n3 = inp.n
    b20, b21 = inp.b2
    b30, b31, b32 = inp.b3
    n = n0 * n1 * n2 * n3
    b = b20 * n1 + b21 * n0
    m = math.gcd(n3, b)
    b2p = b20 * n // n0 + b21 * n // n1 - n
    b3p = b30 * n // n0 + b31 * n // n1 + b32 * n // n2 - n
    return n, b, m, b2p, b3p


def family4_graph(inp: Family4Input, dq) -> PlumbingGraph:
    """Two-curve graph of the partial resolution, pairwise-coprime case.

    The point where the two curves meet has order ``dq``; it is recorded on
    the first curve so that it is counted once.
    """
    if not inp.coprime:
        raise ArgumentError("graph assembly needs pairwise coprime exponents")
    dq = int(dq)
    if dq < 1:
        raise ArgumentError("dq must be a positive integer")
    n0, n1, n2, n3 = inp.n
    n, _, m, b2p, _ = _family4_basics(inp)
    if b2p < 0:
        raise ArgumentError(f"b2' = {b2p} is negative")
    if (b2p + n) % m:
        raise ConsistencyError(f"m = {m} does not divide b2' + N1 = {b2p + n}")
    N1, N2 = n, (b2p + n) // m
    e1 = Vertex(0, None, (n0, n1, dq), contact=0, multiplicity=N1)
    e2 = Vertex(0, None, (n2,) * m + (n3 // m,), contact=m, multiplicity=N2)
    return solve_self_intersections(PlumbingGraph([e1, e2], [Edge(0, 1, Fraction(1, dq))]))


def _general_det(inp: Family4Input, b: int, m: int) -> Fraction:
    n0, n1, n2, n3 = inp.n

    def nijk(a, c, e):
        return a * c * e // lcm_many([a, c, e])

    n23 = math.gcd(n2, n3)
    n123, n023 = nijk(n1, n2, n3), nijk(n0, n2, n3)
    N1 = lcm_many([n0, n1, n2, n3])
    alpha, beta = lcm_many([n1, n2, n3]), lcm_many([n0, n2, n3])
    return (Fraction(b, m) ** (n23 - 1) * Fraction(N1, alpha) ** (n123 - n23)
            * Fraction(N1, beta) ** (n023 - n23) * Fraction(n2, n23) ** (m - 1))


def _general_genera(inp: Family4Input, m: int):
    n0, n1, n2, n3 = inp.n
    n23 = math.gcd(n2, n3)
    n123 = n1 * n2 * n3 // lcm_many([n1, n2, n3])
    n023 = n0 * n2 * n3 // lcm_many([n0, n2, n3])
    g1 = (Fraction(n123, n23) - 1) * (Fraction(n023, n23) - 1) / 2
    g2 = Fraction((n23 - 1) * (m - 1), 2)
    return g1, n23, g2


def family4_analyze(inp: Family4Input, dq_values=range(1, 11)) -> Family4Analysis:
    """Constants, determinant and link type of the C^4 family.

    In the pairwise-coprime case the determinant is ``n2^(m-1)``; it is also
    computed from the two-vertex graph for each ``dq`` in ``dq_values`` and
    the results are stored in ``dq_checks``.  Otherwise only the closed
    formulas are available.
    """
    n, b, m, b2p, b3p = _family4_basics(inp)
    if b2p < 0:
        raise ArgumentError(f"b2' = {b2p} is negative")
    if (b2p + n) % m:
        raise ConsistencyError(f"m = {m} does not divide b2' + N1 = {b2p + n}")
    N2 = (b2p + n) // m
    general = _general_det(inp, b, m)
    if general.denominator != 1 or general <= 0:
        raise ConsistencyError(f"determinant {general} is not a positive integer")
    g1, ncomp, g2 = _general_genera(inp, m)
    checks = {}
    if inp.coprime:
        closed = inp.n[2] ** (m - 1)
        for dq in dq_values:
            checks[int(dq)] = det_singularity(family4_graph(inp, dq))
    else:
        closed = int(general)
    return Family4Analysis(
        input=inp, b=b, m=m, b2p=b2p, b3p=b3p, N1=n, N2=N2,
        det_closed=closed, det_general=int(general),
        is_ZHS=family4_zhs_criterion(inp), genus_E1_components=g1,
        n_E1_components=ncomp, genus_E2=g2, dq_checks=checks,
    )


def family4_zhs_criterion(inp: Family4Input) -> bool:
    _, _, m, _, _ = _family4_basics(inp)
    return inp.coprime and m == 1
