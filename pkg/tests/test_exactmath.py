import math
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from wpsing.errors import ArgumentError
from wpsing.exactmath import (
    as_rational,
    det_exact,
    ext_gcd,
    format_rational,
    gcd_many,
    hj_evaluate,
    hj_expansion,
    lcm_many,
    matrix_rank,
    mod_inverse,
    pairwise_coprime,
    smith_normal_form,
)


def leibniz_det(M):
    n = len(M)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i, j in enumerate(perm):
            term *= M[i][j]
        total += term
    return total


def minor_gcd_factors(M):
    """Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}."""
    rows, cols = len(M), len(M[0])
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                g = math.gcd(g, int(leibniz_det([[M[i][j] for j in c] for i in r])))
        if g == 0:
            out.extend([0] * (min(rows, cols) - k + 1))
            break
        out.append(g // prev)
        prev = g
    return out


@pytest.mark.parametrize("values,expected", [([6, 10, 15], 1), ([4, 6], 2), ([0, 0, 5], 5)])
def test_gcd_many(values, expected):
    assert gcd_many(values) == expected


def test_gcd_many_empty():
    with pytest.raises(ArgumentError):
        gcd_many([])


def test_lcm_and_coprime():
    assert lcm_many([4, 6, 10]) == 60
    assert pairwise_coprime([2, 3, 5])
    assert not pairwise_coprime([2, 3, 4])


@pytest.mark.parametrize("a,m,expected", [(2, 5, 3), (1, 7, 1)])
def test_mod_inverse_examples(a, m, expected):
    assert mod_inverse(a, m) == expected


def test_mod_inverse_large_prime():
    r = mod_inverse(3, 1000003)
    assert 0 <= r < 1000003 and 3 * r % 1000003 == 1


def test_mod_inverse_errors():
    with pytest.raises(ArithmeticError):
        mod_inverse(2, 4)
    with pytest.raises(ArgumentError):
        mod_inverse(2, 0)


@settings(max_examples=1000)
@given(st.integers(1, 10 ** 9), st.integers(2, 10 ** 9))
def test_mod_inverse_property(a, m):
    if math.gcd(a, m) != 1:
        return
    assert mod_inverse(a, m) * a % m == 1


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6))
def test_ext_gcd_bezout(a, b):
    g, s, t = ext_gcd(a, b)
    assert g == math.gcd(a, b) and s * a + t * b == g


def test_rational_io():
    assert as_rational("3/6") == Fraction(1, 2)
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(4, 2)) == "2"
    with pytest.raises(ArgumentError):
        as_rational(True)
    with pytest.raises(ArgumentError):
        as_rational(0.5)


@pytest.mark.parametrize("M,expected", [
    ([[1, 2], [-1, 2]], [1, 4]),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [1, 1, 1]),
    ([[2, 0], [0, 3]], [1, 6]),
    ([[0, 0], [0, 0]], [0, 0]),
])
def test_smith_examples(M, expected):
    assert smith_normal_form(M) == expected


def test_smith_transforms():
    M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    factors, U, V = smith_normal_form(M, transforms=True)
    assert factors == [2, 6, 12]
    prod = [[sum(U[i][k] * M[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    D = [[sum(prod[i][k] * V[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert D == [[factors[i] if i == j else 0 for j in range(3)] for i in range(3)]
    assert abs(det_exact(U)) == 1 and abs(det_exact(V)) == 1


small_matrix = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(small_matrix)
def test_smith_against_minor_gcds(M):
    factors = smith_normal_form(M)
    assert factors == minor_gcd_factors(M)
    nonzero = [f for f in factors if f]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert len(nonzero) == matrix_rank(M)


rational = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rational, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_det_matches_leibniz(M):
    assert det_exact(M) == leibniz_det(M)


@pytest.mark.parametrize("M,expected", [
    ([[-3, 2], [2, -4]], 8), ([[Fraction(-1, 2)]], Fraction(-1, 2)), ([[1, 2], [2, 4]], 0),
])
def test_det_examples(M, expected):
    assert det_exact(M) == expected


def test_det_nonsquare():
    with pytest.raises(ArgumentError):
        det_exact([[1, 2]])


@pytest.mark.parametrize("d,a,expected", [(5, 2, [3, 2]), (9, 1, [9]), (7, 3, [3, 2, 2])])
def test_hj_examples(d, a, expected):
    assert hj_expansion(d, a) == expected


@pytest.mark.parametrize("d,a", [(5, 0), (5, 5), (6, 4)])
def test_hj_invalid(d, a):
    with pytest.raises(ArgumentError):
        hj_expansion(d, a)


@given(st.integers(2, 400).flatmap(lambda d: st.tuples(st.just(d), st.integers(1, d - 1))))
def test_hj_roundtrip(da):
    d, a = da
    if math.gcd(d, a) != 1:
        return
    bs = hj_expansion(d, a)
    assert all(b >= 2 for b in bs)
    assert hj_evaluate(bs) == Fraction(d, a)


def test_hj_tridiagonal_det():
    for d in range(2, 51):
        for a in range(1, d):
            if math.gcd(d, a) == 1:
                bs = hj_expansion(d, a)
                n = len(bs)
                M = [[bs[i] if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
                assert det_exact(M) == d
