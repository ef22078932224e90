"""Determinants of superisolated, Le-Yomdin and weighted Le-Yomdin
singularities, cyclic germs ``z^k = x^a + y^b``, and two experiment
harnesses around conjectural statements about them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from .bpfamily import bp_analyze
from .errors import ArgumentError, ConsistencyError
from .exactmath import format_rational, lcm_many
from .wproj import Weight3, normalize_weight


def _check_degrees(d: int, deltas: Sequence[int]) -> list[int]:
    deltas = list(deltas)
    if d < 1 or not deltas or any(x < 1 for x in deltas):
        raise ArgumentError("degree and component degrees must be positive")
    if sum(deltas) != d:
        raise ArgumentError(f"component degrees {deltas} do not add up to {d}")
    return deltas


def _as_positive_int(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value <= 0:
        raise ConsistencyError(f"{what} {value} is not a positive integer")
    return int(value)


# --------------------------------------------------------------------------
# superisolated and Le-Yomdin

def si_det(d: int, deltas: Sequence[int]) -> int:
    """``(d+1)^(s-1) * prod(delta_i)`` for a tangent cone with components of degree delta_i."""
    deltas = _check_degrees(d, deltas)
    return (d + 1) ** (len(deltas) - 1) * math.prod(deltas)


def ly_intersection_matrix(d: int, k: int, deltas: Sequence[int]) -> list[list[Fraction]]:
    """Intersection matrix of the tangent-cone components on the blown-up surface."""
    deltas = _check_degrees(d, deltas)
    if k < 1:
        raise ArgumentError("k must be positive")
    s = len(deltas)
    return [[Fraction(-deltas[i] * (d - deltas[i] + k), k) if i == j
             else Fraction(deltas[i] * deltas[j], k) for j in range(s)] for i in range(s)]


def si_intersection_matrix(d: int, deltas: Sequence[int]) -> list[list[Fraction]]:
    return ly_intersection_matrix(d, 1, deltas)


def ly_det(d: int, k: int, deltas: Sequence[int], germ_dets: Sequence[int] = ()) -> int:
    """``prod(delta_i) * ((d+k)/k)^(s-1) * prod(germ_dets)``, checked to be integral."""
    deltas = _check_degrees(d, deltas)
    if k < 1:
        raise ArgumentError("k must be positive")
    if any(g < 1 for g in germ_dets):
        raise ArgumentError("germ determinants must be positive")
    value = math.prod(deltas) * Fraction(d + k, k) ** (len(deltas) - 1) * math.prod(germ_dets)
    return _as_positive_int(value, "determinant")


# --------------------------------------------------------------------------
# weighted Le-Yomdin

@dataclass(frozen=True)
class WlyCurveData:
    """Quasi-tangent cone data of a weighted Le-Yomdin singularity.

    ``eps`` flags which coordinate axes are components; ``deltas`` are the
    degrees of the remaining components; ``germ_dets`` the determinants of
    the singular points of the partial resolution along the curve.
    """
    weight: Weight3
    k: int
    d: int
    deltas: tuple
    eps: tuple = (0, 0, 0)
    germ_dets: tuple = ()

    def __post_init__(self):
        w = self.weight if isinstance(self.weight, Weight3) else Weight3(*self.weight)
        object.__setattr__(self, "weight", w)
        object.__setattr__(self, "deltas", tuple(self.deltas))
        object.__setattr__(self, "eps", tuple(self.eps))
        object.__setattr__(self, "germ_dets", tuple(self.germ_dets))
        if self.k < 1 or self.d < 1:
            raise ArgumentError("k and d must be positive")
        if len(self.eps) != 3 or any(x not in (0, 1) for x in self.eps):
            raise ArgumentError("eps must be three 0/1 flags")
        if any(x < 1 for x in self.deltas) or any(g < 1 for g in self.germ_dets):
            raise ArgumentError("component degrees and germ determinants must be positive")
        if not self.deltas and not any(self.eps):
            raise ArgumentError("the curve needs at least one component")
        e = w.as_tuple()
        if sum(self.deltas) + sum(f * x for f, x in zip(self.eps, e)) != self.d:
            raise ArgumentError("component degrees do not add up to d")
        nz = normalize_weight(w)
        ddd = nz.d1 * nz.d2 * nz.d3
        if any(x % ddd for x in self.deltas):
            raise ArgumentError(f"component degrees must be divisible by d1*d2*d3 = {ddd}")

    def components(self) -> list[tuple[int, int]]:
        """``(degree, scale)`` per component: curves first, then the axes X, Y, Z."""
        nz = normalize_weight(self.weight)
        out = [(x, 1) for x in self.deltas]
        for flag, e, di in zip(self.eps, self.weight.as_tuple(), nz.d):
            if flag:
                out.append((e, di))
        return out


def wly_intersection_matrix(data: WlyCurveData) -> list[list[Fraction]]:
    """Intersection matrix of the components of the quasi-tangent cone.

    With ``E = e1 e2 e3`` the orbifold entries are ``deg_u deg_v / (k E)`` off
    the diagonal and ``-deg (d - deg + k) / (k E)`` on it; rows and columns of
    an axis are then multiplied by the matching ``d_i``.
    """
    E = math.prod(data.weight.as_tuple())
    comps = data.components()
    kE = data.k * E
    d, k = data.d, data.k
    n = len(comps)
    A = [[Fraction(0)] * n for _ in range(n)]
    for i, (gi, si) in enumerate(comps):
        for j, (gj, sj) in enumerate(comps):
            if i == j:
                A[i][j] = Fraction(-si * si * gi * (d - gi + k), kE)
            else:
                A[i][j] = Fraction(si * sj * gi * gj, kE)
    return A


def wly_det_matrix(data: WlyCurveData) -> Fraction:
    """Closed form of ``det(-A)`` for :func:`wly_intersection_matrix`."""
    E = math.prod(data.weight.as_tuple())
    comps = data.components()
    scale = math.prod(s * s for _, s in comps)
    return (scale * math.prod(g for g, _ in comps)
            * Fraction(data.d + data.k, data.k * E) ** (len(comps) - 1) / E)


def wly_det(data: WlyCurveData) -> int:
    """``det(-A)`` times the germ determinants, checked to be integral."""
    return _as_positive_int(wly_det_matrix(data) * math.prod(data.germ_dets), "determinant")


# --------------------------------------------------------------------------
# cyclic germs

@dataclass(frozen=True)
class CyclicGerm:
    a: int
    b: int
    k: int

    def __post_init__(self):
        if min(self.a, self.b, self.k) < 1:
            raise ArgumentError("exponents and k must be positive")


@dataclass(frozen=True)
class GermDet:
    det: int
    exceptional_genus: int
    is_QHS: bool


@lru_cache(maxsize=None)
def _germ(a: int, b: int, k: int) -> GermDet:
    r = bp_analyze(a, b, k)
    return GermDet(r.det, r.exceptional_genus, r.is_QHS)


def cyclic_germ_det(a, b=None, k=None) -> GermDet:
    """Determinant and exceptional genus of ``z^k = x^a + y^b``."""
    if isinstance(a, CyclicGerm):
        a, b, k = a.a, a.b, a.k
    CyclicGerm(a, b, k)
    return _germ(a, b, k)


def ly_rhs_check(components: Sequence, single_intersection_point: bool,
                 germ_links_QHS: Sequence[bool]) -> bool:
    """Rational homology sphere criterion for a Le-Yomdin singularity.

    ``components`` holds one entry per component of the tangent cone, each a
    mapping with key ``rational_cuspidal`` (or a bare bool).  The
    intersection-point condition only matters with two or more components.
    """
    comps = list(components)
    if not comps:
        raise ArgumentError("the tangent cone has at least one component")
    flags = [c["rational_cuspidal"] if isinstance(c, dict) else bool(c) for c in comps]
    if not all(flags):
        return False
    if len(comps) > 1 and not single_intersection_point:
        return False
    return all(germ_links_QHS)


# --------------------------------------------------------------------------
# experiment harnesses

def _fit_polynomial(ks: list[int], values: list[int], ratio: int = 2):
    """Least-degree polynomial in ``k`` through equally spaced points, found
    with finite differences; ``None`` if the data does not pin one down."""
    row = [Fraction(v) for v in values]
    leading = []
    for deg in range(len(values)):
        leading.append(row[0])
        if all(x == row[0] for x in row):
            if ratio * (deg + 1) > len(values):
                return None
            return _newton_to_coeffs(ks, leading, deg)
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
    return None


def _newton_to_coeffs(ks: list[int], leading: list[Fraction], deg: int) -> list[Fraction]:
    # values along k = k0 + j*step; Newton form in j, converted to powers of k
    k0 = ks[0]
    step = ks[1] - ks[0] if len(ks) > 1 else 1
    coeffs = [Fraction(0)] * (deg + 1)
    basis = [Fraction(1)]          # coefficients of binom(j, i) as a polynomial in k
    for i in range(deg + 1):
        for p, c in enumerate(basis):
            coeffs[p] += leading[i] * c
        # next basis: basis * (j - i) / (i + 1) with j = (k - k0)/step
        nxt = [Fraction(0)] * (len(basis) + 1)
        for p, c in enumerate(basis):
            nxt[p + 1] += c / step
            nxt[p] += c * (Fraction(-k0, step) - i)
        basis = [c / (i + 1) for c in nxt]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass
class ScanResult:
    a: int
    b: int
    k_max: int
    values: list
    period: Optional[int]
    fits: dict = field(default_factory=dict)
    lcm: int = 1

    @property
    def verdict(self) -> str:
        if self.period is None:
            return "undetermined"
        return "consistent" if self.lcm % self.period == 0 else "inconsistent"

    def as_dict(self):
        return {
            "a": self.a, "b": self.b, "kmax": self.k_max, "period": self.period,
            "lcm": self.lcm, "verdict": self.verdict, "values": self.values,
            "fits": {str(r): [format_rational(c) for c in cs] for r, cs in sorted(self.fits.items())},
        }


def conjecture_scan(a: int, b: int, k_max: int = 60) -> ScanResult:
    """Detect the least period ``P`` for which ``det(z^k = x^a + y^b)`` is a
    polynomial in ``k`` on every residue class mod ``P``.

    A class with ``m`` values accepts a fit of degree ``D`` only if
    ``2 (D + 1) <= m``, so each fit is confirmed by as many extra points as it
    has coefficients.
    """
    if k_max < 12:
        raise ArgumentError("k_max must be at least 12")
    values = [cyclic_germ_det(a, b, k).det for k in range(1, k_max + 1)]
    result = ScanResult(a, b, k_max, values, None, lcm=lcm_many([a, b]))
    for P in range(1, k_max // 3 + 1):
        fits = {}
        for r in range(P):
            ks = list(range(r if r else P, k_max + 1, P))
            fit = _fit_polynomial(ks, [values[k - 1] for k in ks])
            if fit is None:
                break
            fits[r] = fit
        else:
            result.period, result.fits = P, fits
            break
    return result


def is_rational_cuspidal(d: int, germs: Sequence[tuple[int, int]]) -> bool:
    """Irreducible curve of degree ``d`` whose singular points are the
    unibranch germs ``x^a + y^b`` (gcd(a,b) = 1) and whose genus drops to 0."""
    if any(math.gcd(a, b) != 1 for a, b in germs):
        return False
    return sum((a - 1) * (b - 1) for a, b in germs) == (d - 1) * (d - 2)


def _partitions(n: int, largest: Optional[int] = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def conjecture2_scan(bound: int = 8, max_germs: int = 3, stats: Optional[dict] = None) -> list[dict]:
    """Search Le-Yomdin data with ``k > 1`` whose link is an integral homology sphere.

    Ranges: ``2 <= d <= bound``, ``2 <= k <= bound``, every partition of ``d``
    into component degrees, and up to ``max_germs`` singular points of type
    ``x^a + y^b`` with ``2 <= a <= b <= bound``.  A tuple is reported when
    its determinant is 1 and the homology sphere criterion holds.  For an
    irreducible cone rational cuspidality is decided from the germs; with
    several components the geometric flags are taken as satisfied, which can
    only enlarge the output.
    """
    if bound < 2:
        raise ArgumentError("bound must be at least 2")
    pairs = [(a, b) for a in range(2, bound + 1) for b in range(a, bound + 1)]
    germ_sets = [c for size in range(max_germs + 1) for c in combinations_with_replacement(pairs, size)]
    found = []
    checked = 0
    for k in range(2, bound + 1):
        gd = {p: cyclic_germ_det(p[0], p[1], k) for p in pairs}
        germ_prod = [math.prod(gd[p].det for p in gs) for gs in germ_sets]
        for d in range(2, bound + 1):
            for deltas in _partitions(d):
                base = math.prod(deltas) * Fraction(d + k, k) ** (len(deltas) - 1)
                for gs, gp in zip(germ_sets, germ_prod):
                    checked += 1
                    value = base * gp
                    if value != 1:
                        continue
                    comps = ([{"rational_cuspidal": is_rational_cuspidal(d, gs)}] if len(deltas) == 1
                             else [{"rational_cuspidal": True}] * len(deltas))
                    if ly_rhs_check(comps, True, [gd[p].is_QHS for p in gs]):
                        found.append({"d": d, "k": k, "deltas": list(deltas),
                                      "germs": [list(p) for p in gs]})
    if stats is not None:
        stats["checked"] = checked
    return sorted(found, key=lambda r: (r["d"], r["k"], r["deltas"], r["germs"]))
