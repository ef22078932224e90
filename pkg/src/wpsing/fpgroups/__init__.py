"""Finitely presented groups: words, coset enumeration, subgroup
presentations, abelianization and finite quotients."""
from .abelian import AbelianInvariants, abelianization, relation_matrix
from .builders import (
    BUILDERS,
    build,
    builder_params,
    conic_quotient_order,
    milnor_fiber_order,
    pres1_exponent,
)
from .s3 import count_epimorphisms_to_S3
from .schreier import homomorphism_coset_table, parity_coset_table, reidemeister_schreier
from .todd_coxeter import DEFAULT_MAX_COSETS, EnumerationResult, group_order, todd_coxeter
from .words import (
    GroupPresentation,
    Word,
    commutator,
    format_word,
    parse_presentation,
    reduce_word,
    word_inverse,
    word_mul,
    word_power,
)

__all__ = [
    "AbelianInvariants", "abelianization", "relation_matrix", "BUILDERS", "build",
    "builder_params", "conic_quotient_order", "milnor_fiber_order", "pres1_exponent",
    "count_epimorphisms_to_S3", "homomorphism_coset_table", "parity_coset_table",
    "reidemeister_schreier", "DEFAULT_MAX_COSETS", "EnumerationResult", "group_order",
    "todd_coxeter", "GroupPresentation", "Word", "commutator", "format_word",
    "parse_presentation", "reduce_word", "word_inverse", "word_mul", "word_power",
]
