"""Exact integer and rational linear algebra.

Everything here works on plain Python integers and :class:`fractions.Fraction`
so results never lose precision.  Matrices are lists of rows.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .errors import ArgumentError

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"-5/2"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ArgumentError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ArgumentError(f"not a rational: {value!r}") from exc
    raise ArgumentError(f"not a rational: {value!r}")


def format_rational(q) -> str:
    q = as_rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def gcd_many(values: Sequence[int]) -> int:
    values = list(values)
    if not values:
        raise ArgumentError("gcd_many needs at least one value")
    return reduce(math.gcd, values, 0)


def lcm_many(values: Sequence[int]) -> int:
    values = list(values)
    if not values:
        raise ArgumentError("lcm_many needs at least one value")
    return reduce(math.lcm, values, 1)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(a, b) = s*a + t*b`` and ``g >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` in ``[0, m)``."""
    if m < 1:
        raise ArgumentError(f"modulus must be positive, got {m}")
    g, s, _ = ext_gcd(a % m, m)
    if g != 1:
        raise ArithmeticError(f"{a} is not invertible modulo {m}")
    return s % m


def pairwise_coprime(values: Sequence[int]) -> bool:
    vals = list(values)
    return all(math.gcd(vals[i], vals[j]) == 1
               for i in range(len(vals)) for j in range(i + 1, len(vals)))


# --------------------------------------------------------------------------
# Smith normal form

def _check_rect(M) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise ArgumentError("ragged matrix")
    return rows, cols


def smith_normal_form(M, transforms: bool = False):
    """Invariant factors of an integer matrix.

    Returns the list ``[d1, d2, ...]`` of length ``min(rows, cols)`` with
    ``d1 | d2 | ...`` and zeros trailing.  With ``transforms=True`` returns
    ``(factors, U, V)`` where ``U`` and ``V`` are unimodular and ``U*M*V`` is
    the diagonal matrix of the factors.
    """
    rows, cols = _check_rect(M)
    A = [[int(x) for x in row] for row in M]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)] if transforms else None
    V = [[int(i == j) for j in range(cols)] for i in range(cols)] if transforms else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        if U is not None:
            U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for row in A:
            row[dst] += k * row[src]
        if V is not None:
            for row in V:
                row[dst] += k * row[src]

    n = min(rows, cols)
    for t in range(n):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = A[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    add_row(i, t, -q)
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    add_col(j, t, -q)
                if A[t][j]:
                    dirty = True
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]

    factors = [A[i][i] for i in range(n)]
    if transforms:
        return factors, U, V
    return factors


# --------------------------------------------------------------------------
# Determinants

def det_exact(M) -> Fraction:
    """Exact determinant of a square rational matrix.

    Rows are cleared of denominators first, then fraction-free (Bareiss)
    elimination runs on the integer matrix.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ArgumentError("det_exact needs a square matrix")
    if n == 0:
        return Fraction(1)
    scale = 1
    A = []
    for row in M:
        qs = [as_rational(x) for x in row]
        den = lcm_many([q.denominator for q in qs])
        scale *= den
        A.append([q.numerator * (den // q.denominator) for q in qs])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return Fraction(0)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return Fraction(sign * A[n - 1][n - 1], scale)


def matrix_rank(M) -> int:
    """Rank over Q of an integer or rational matrix."""
    A = [[as_rational(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(rows):
            if r != rank and A[r][c]:
                f = A[r][c] / A[rank][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


# --------------------------------------------------------------------------
# Hirzebruch-Jung continued fractions

def hj_expansion(d: int, a: int) -> list[int]:
    """Expansion ``d/a = b1 - 1/(b2 - 1/(...))`` with every ``b_i >= 2``."""
    if not 0 < a < d:
        raise ArgumentError(f"need 0 < a < d, got d={d}, a={a}")
    if math.gcd(a, d) != 1:
        raise ArgumentError(f"gcd({a}, {d}) != 1")
    out = []
    num, den = d, a
    while den:
        b = -(-num // den)
        out.append(b)
        num, den = den, b * den - num
    return out


def hj_evaluate(bs: Sequence[int]) -> Fraction:
    """Inverse of :func:`hj_expansion`."""
    if not bs:
        raise ArgumentError("empty continued fraction")
    val = Fraction(bs[-1])
    for b in reversed(bs[:-1]):
        val = b - 1 / val
    return val
