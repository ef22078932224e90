import math
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from wpsing.errors import ArgumentError, ConsistencyError
from wpsing.exactmath import det_exact
from wpsing.leyomdin import (
    WlyCurveData,
    conjecture2_scan,
    conjecture_scan,
    cyclic_germ_det,
    is_rational_cuspidal,
    ly_det,
    ly_intersection_matrix,
    ly_rhs_check,
    si_det,
    si_intersection_matrix,
    wly_det,
    wly_det_matrix,
    wly_intersection_matrix,
)


def neg_det(A):
    return det_exact([[-x for x in row] for row in A])


def test_si_examples():
    assert si_det(3, [3]) == 3
    assert si_det(3, [1, 2]) == 8
    assert si_det(4, [1, 1, 1, 1]) == 5 ** 3
    assert neg_det(si_intersection_matrix(3, [1, 2])) == 8


def test_degree_validation():
    with pytest.raises(ArgumentError):
        si_det(4, [1, 2])
    with pytest.raises(ArgumentError):
        ly_det(3, 0, [3])
    with pytest.raises(ArgumentError):
        ly_det(3, 1, [3], [0])
    with pytest.raises(ConsistencyError):
        ly_det(2, 4, [1, 1])        # 6/4


def partitions(n):
    if n == 0:
        return [[]]
    return [[k] + rest for k in range(1, n + 1) for rest in partitions(n - k) if not rest or rest[0] <= k]


@settings(max_examples=80)
@given(st.integers(1, 7).flatmap(lambda d: st.tuples(st.just(d), st.sampled_from(partitions(d)))),
       st.integers(1, 6))
def test_ly_closed_form_matches_matrix(dd, k):
    d, deltas = dd
    A = ly_intersection_matrix(d, k, deltas)
    value = neg_det(A)
    try:
        assert ly_det(d, k, deltas) == value
    except ConsistencyError:
        assert value.denominator != 1
    if k == 1:
        assert si_det(d, deltas) == value


@settings(deadline=None)
@given(st.integers(2, 7).flatmap(lambda d: st.sampled_from(partitions(d))), st.integers(1, 5), st.randoms())
def test_ly_symmetric_in_components(deltas, k, rnd):
    d = sum(deltas)
    base = neg_det(ly_intersection_matrix(d, k, deltas))
    for p in rnd.sample(sorted(set(permutations(deltas))), min(6, len(set(permutations(deltas))))):
        assert neg_det(ly_intersection_matrix(d, k, list(p))) == base


@settings(max_examples=80)
@given(st.integers(1, 7).flatmap(lambda d: st.tuples(st.just(d), st.sampled_from(partitions(d)))),
       st.integers(1, 6))
def test_unit_weight_wly_is_ly(dd, k):
    d, deltas = dd
    data = WlyCurveData((1, 1, 1), k, d, tuple(deltas))
    assert wly_det_matrix(data) == neg_det(ly_intersection_matrix(d, k, deltas))


WLY = [
    WlyCurveData((1, 2, 3), 1, 6, (6,)),
    WlyCurveData((1, 2, 3), 2, 12, (6,), (1, 1, 1)),
    WlyCurveData((1, 2, 3), 5, 8, (6,), (0, 1, 0)),
    WlyCurveData((2, 3, 5), 3, 60, (30, 30)),
    WlyCurveData((2, 3, 5), 1, 35, (30,), (0, 0, 1)),
    WlyCurveData((1, 1, 2), 4, 4, (2,), (0, 0, 1), (3,)),
]


@pytest.mark.parametrize("data", WLY)
def test_wly_closed_form_matches_matrix(data):
    A = wly_intersection_matrix(data)
    assert wly_det_matrix(data) == neg_det(A)
    expected = neg_det(A) * math.prod(data.germ_dets)
    if expected.denominator == 1:
        assert wly_det(data) == expected
    else:
        with pytest.raises(ConsistencyError):
            wly_det(data)


def test_wly_validation():
    with pytest.raises(ArgumentError):
        WlyCurveData((1, 2, 3), 1, 7, (6,))           # degrees do not add up
    with pytest.raises(ArgumentError):
        WlyCurveData((2, 2, 3), 1, 3, (3,))           # not divisible by d1 d2 d3 = 2
    with pytest.raises(ArgumentError):
        WlyCurveData((1, 2, 3), 1, 6, (), (0, 0, 0))
    with pytest.raises(ArgumentError):
        WlyCurveData((1, 2, 3), 1, 6, (6,), (0, 2, 0))


def test_cyclic_germs():
    g = cyclic_germ_det(2, 3, 5)
    assert (g.det, g.exceptional_genus, g.is_QHS) == (1, 0, True)
    assert cyclic_germ_det(2, 2, 2).det == 2
    assert cyclic_germ_det(3, 3, 3).exceptional_genus == 1
    with pytest.raises(ArgumentError):
        cyclic_germ_det(2, 3, 0)


def test_rhs_check():
    assert ly_rhs_check([True], False, [True, True])
    assert not ly_rhs_check([{"rational_cuspidal": False}], True, [])
    assert not ly_rhs_check([True, True], False, [])
    assert ly_rhs_check([True, True], True, [])
    assert not ly_rhs_check([True], True, [False])
    with pytest.raises(ArgumentError):
        ly_rhs_check([], True, [])


def test_rational_cuspidal():
    assert is_rational_cuspidal(3, [(2, 3)])
    assert is_rational_cuspidal(4, [(3, 4)])
    assert is_rational_cuspidal(4, [(2, 3), (2, 3), (2, 3)])
    assert not is_rational_cuspidal(4, [(2, 3)])
    assert not is_rational_cuspidal(3, [(2, 4)])
    assert is_rational_cuspidal(1, [])


def test_scan_periods():
    r = conjecture_scan(2, 3, 60)
    assert r.period == 6 and r.verdict == "consistent"
    assert [r.fits[k % 6][0] for k in range(1, 13)] == r.values[:12]
    assert conjecture_scan(2, 4, 60).verdict == "consistent"
    with pytest.raises(ArgumentError):
        conjecture_scan(2, 3, 5)


def test_small_search_finds_nothing():
    stats = {}
    assert conjecture2_scan(4, 2, stats) == []
    assert stats["checked"] > 0
