"""Exact polynomials over Q(zeta) and the curve constructions built on them."""
from .field import QZ3, ZETA, cube_root_of_unity
from .multipoly import MultiPoly
from .parser import parse_poly
from .curves import (
    are_collinear,
    brieskorn_pham,
    catalog,
    contact_order,
    cremona_conic,
    cremona_push,
    flex_tangency_points,
    h_lambda,
    kummer_conic,
    kummer_pull,
    line_restriction,
    strip_monomial_factor,
    tritangent_conic,
    wdegree_decompose,
)

__all__ = [
    "QZ3", "ZETA", "cube_root_of_unity", "MultiPoly", "parse_poly",
    "are_collinear", "brieskorn_pham", "catalog", "contact_order", "cremona_conic",
    "cremona_push", "flex_tangency_points", "h_lambda", "kummer_conic", "kummer_pull",
    "line_restriction", "strip_monomial_factor", "tritangent_conic", "wdegree_decompose",
]
