"""Exact invariants of curves on weighted projective planes and of normal
surface singularities."""
__version__ = "0.1.0"
