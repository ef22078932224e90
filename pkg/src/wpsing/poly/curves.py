"""Curve constructions: weighted decomposition, Cremona and Kummer
substitutions, a catalog of named polynomials and the flex witness."""
from __future__ import annotations

from typing import Sequence

from ..errors import ArgumentError
from ..wproj import validate_cremona
from .field import QZ3, cube_root_of_unity
from .multipoly import MultiPoly


def wdegree_decompose(F: MultiPoly, w: Sequence[int]) -> dict[int, MultiPoly]:
    """Split ``F`` into weighted homogeneous pieces keyed by weighted degree."""
    w = tuple(w)
    if len(w) != F.nvars:
        raise ArgumentError(f"need {F.nvars} weights, got {len(w)}")
    buckets: dict[int, dict] = {}
    for e, c in F.terms.items():
        buckets.setdefault(sum(a * b for a, b in zip(e, w)), {})[e] = c
    return {deg: MultiPoly(F.nvars, terms) for deg, terms in sorted(buckets.items())}


def cremona_images(alpha, beta) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    (a1, a2, _), (b1, b2) = validate_cremona(alpha, beta)
    return (MultiPoly.monomial((0, a1, 1)),
            MultiPoly.monomial((a2, 0, 1)),
            MultiPoly.monomial((b1, b2, 0)))


def cremona_push(f: MultiPoly, alpha, beta) -> MultiPoly:
    """Substitute ``x -> y^a1 z, y -> x^a2 z, z -> x^b1 y^b2``.

    A homogeneous ``f`` of degree ``n`` becomes weighted homogeneous of degree
    ``n (a1 a2 + a3)`` for the weight ``alpha``.
    """
    if f.nvars != 3:
        raise ArgumentError("the Cremona substitution acts on 3 variables")
    return f.substitute(cremona_images(alpha, beta))


def strip_monomial_factor(f: MultiPoly) -> tuple[MultiPoly, tuple]:
    """Write ``f = x^a y^b z^c * g`` with ``g`` divisible by no variable."""
    if f.is_zero():
        raise ArgumentError("zero polynomial has no monomial factor")
    low = tuple(min(e[i] for e in f.terms) for i in range(f.nvars))
    g = MultiPoly(f.nvars, {tuple(a - b for a, b in zip(e, low)): c for e, c in f.terms.items()})
    return g, low


def kummer_pull(f: MultiPoly, d: Sequence[int]) -> MultiPoly:
    """Substitute ``x_i -> x_i^{d_i}``."""
    d = tuple(d)
    if len(d) != f.nvars or any(isinstance(k, bool) or not isinstance(k, int) or k < 1 for k in d):
        raise ArgumentError(f"need {f.nvars} positive exponents, got {d!r}")
    return f.map_exponents(lambda e: [a * k for a, k in zip(e, d)])


# --------------------------------------------------------------------------
# catalog

def _mono(*exps, c=1) -> MultiPoly:
    return MultiPoly.monomial(exps, c)


def h_lambda(lam) -> MultiPoly:
    """Smooth cubic tangent to the three axes at flexes, ``lam^3 = 1``."""
    lam = cube_root_of_unity(lam)
    li = lam.inverse()
    x, y, z = MultiPoly.gens()
    return (x ** 3 + y ** 3 + z ** 3
            + 3 * x * y * (li * x + lam * y)
            + 3 * x * z * (x + z)
            + 3 * y * z * (li * y + lam * z))


def tritangent_conic() -> MultiPoly:
    x, y, z = MultiPoly.gens()
    return x ** 2 + y ** 2 + z ** 2 - 2 * (y * z + x * z + x * y)


def cremona_conic(alpha, beta) -> MultiPoly:
    """The tritangent conic pushed by the weighted Cremona map, written out."""
    (a1, a2, _), (b1, b2) = validate_cremona(alpha, beta)
    return (_mono(0, 2 * a1, 2) + _mono(2 * a2, 0, 2) + _mono(2 * b1, 2 * b2, 0)
            - 2 * (_mono(a2, a1, 2) + _mono(b1, a1 + b2, 1) + _mono(a2 + b1, b2, 1)))


def kummer_conic(d) -> MultiPoly:
    d1, d2, d3 = tuple(d)
    if min(d1, d2, d3) < 1:
        raise ArgumentError("Kummer exponents must be positive")
    return (_mono(2 * d1, 0, 0) + _mono(0, 2 * d2, 0) + _mono(0, 0, 2 * d3)
            - 2 * (_mono(d1, d2, 0) + _mono(d1, 0, d3) + _mono(0, d2, d3)))


def brieskorn_pham(n) -> MultiPoly:
    n1, n2, n3 = tuple(n)
    if min(n1, n2, n3) < 1:
        raise ArgumentError("exponents must be positive")
    return _mono(n1, 0, 0) + _mono(0, n2, 0) + _mono(0, 0, n3)


CATALOG = {
    "H_lambda": lambda p: h_lambda(p.get("lam", p.get("lambda", 1))),
    "conic": lambda p: tritangent_conic(),
    "F_wcremona_conic": lambda p: cremona_conic(p["alpha"], p["beta"]),
    "F_kummer_conic": lambda p: kummer_conic(p["d"]),
    "bp": lambda p: brieskorn_pham(p["n"]),
}


def catalog(name: str, **params) -> MultiPoly:
    if name not in CATALOG:
        raise ArgumentError(f"unknown catalog entry {name!r}; known: {sorted(CATALOG)}")
    try:
        return CATALOG[name](params)
    except KeyError as exc:
        raise ArgumentError(f"{name} needs parameter {exc.args[0]!r}") from exc


# --------------------------------------------------------------------------
# flexes and collinearity

def flex_tangency_points(lam) -> tuple[tuple, tuple, tuple]:
    """Tangency points of ``H_lam`` with ``x=0``, ``y=0``, ``z=0`` in this order."""
    lam = cube_root_of_unity(lam)
    one, zero = QZ3(1), QZ3(0)
    return ((zero, one, -lam), (-one, zero, one), (one, -lam, zero))


def _check_point(p) -> tuple:
    p = tuple(QZ3.coerce(c) for c in p)
    if len(p) != 3:
        raise ArgumentError("points need three coordinates")
    if not any(p):
        raise ArgumentError("the zero vector is not a projective point")
    return p


def line_restriction(f: MultiPoly, p, q) -> list:
    """Coefficients ``c_k`` of ``f(p + t q) = sum c_k t^k``."""
    p, q = _check_point(p), _check_point(q)
    t = MultiPoly.var(0)
    images = [MultiPoly.constant(a) + MultiPoly.constant(b) * t for a, b in zip(p, q)]
    g = f.substitute(images)
    deg = max((e[0] for e in g.terms), default=0)
    return [g.terms.get((k, 0, 0), QZ3(0)) for k in range(deg + 1)]


def contact_order(f: MultiPoly, p, q) -> int | None:
    """Intersection multiplicity at ``p`` of ``f=0`` with the line ``pq``.

    ``None`` when the line lies inside the curve.
    """
    coeffs = line_restriction(f, p, q)
    return next((k for k, c in enumerate(coeffs) if c), None)


def are_collinear(p1, p2, p3) -> bool:
    (a, b, c), (d, e, f), (g, h, i) = (_check_point(p) for p in (p1, p2, p3))
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return not det
