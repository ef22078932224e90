import math

import pytest
from hypothesis import given, strategies as st

from wpsing.errors import ArgumentError, ParseError
from wpsing.plumbing import det_singularity
from wpsing.quotientsing import CyclicQuotient, NormalizedQuotient, normalize, order, resolve_bamboo


def selfs(g):
    return [int(v.self_intersection) for v in g.vertices]


@pytest.mark.parametrize("text,expected", [
    ("1/5(2,3)", NormalizedQuotient(5, 4)),
    ("1/7(1,1)", NormalizedQuotient(7, 1)),
    ("1/6(2,3)", NormalizedQuotient(1, 0)),
    ("1/5(2,-1)", NormalizedQuotient(5, 2)),
    ("1/12(3,4)", NormalizedQuotient(1, 0)),
    ("1/4(1,2)", NormalizedQuotient(2, 1)),
])
def test_normalize_examples(text, expected):
    assert normalize(CyclicQuotient.parse(text)) == expected


def test_pseudo_reflection_reduction_matches_bamboo():
    # 1/8(2,1): zeta^4 acts as (1, -1), a reflection; y -> y^2 leaves 1/4(1,1)
    n = normalize(CyclicQuotient(8, 2, 1))
    assert n == NormalizedQuotient(4, 1)
    assert selfs(resolve_bamboo(CyclicQuotient(8, 2, 1))) == [-4]


@pytest.mark.parametrize("q,bamboo", [((5, 2), [-3, -2]), ((6, 1), [-6]), ((7, 3), [-3, -2, -2])])
def test_resolve_bamboo_examples(q, bamboo):
    assert selfs(resolve_bamboo(NormalizedQuotient(*q))) == bamboo


@pytest.mark.parametrize("s,expected", [
    (CyclicQuotient(5, 1, 2), 5), (CyclicQuotient(1, 0, 0), 1), (CyclicQuotient(12, 1, 5), 12),
    (CyclicQuotient(6, 2, 3), 1),
])
def test_order_examples(s, expected):
    assert order(s) == expected == s.order()


def test_errors():
    with pytest.raises(ParseError):
        CyclicQuotient.parse("1/5[2,3]")
    with pytest.raises(ArgumentError):
        CyclicQuotient(6, 2, 4)
    with pytest.raises(ArgumentError):
        CyclicQuotient(0, 1, 1)
    with pytest.raises(ArgumentError):
        resolve_bamboo(CyclicQuotient(1, 0, 0))
    with pytest.raises(ArgumentError):
        NormalizedQuotient(6, 2)


def test_bamboo_determinant_all_d():
    for d in range(2, 51):
        for q in range(1, d):
            if math.gcd(d, q) == 1:
                assert det_singularity(resolve_bamboo(NormalizedQuotient(d, q))) == d


faithful = st.integers(1, 60).flatmap(lambda d: st.tuples(st.just(d), st.integers(-100, 100), st.integers(-100, 100)))


@given(faithful)
def test_normalize_idempotent_and_order(t):
    d, a, b = t
    if d > 1 and math.gcd(d, math.gcd(a, b)) != 1:
        return
    s = CyclicQuotient(d, a, b)
    n = normalize(s)
    assert normalize(n) == n
    assert normalize(n.as_cyclic()) == n
    assert order(n.as_cyclic()) == order(s) == n.d
    assert n.d <= d and d % n.d == 0


@given(faithful, st.integers(1, 60))
def test_invariant_under_unit_rescaling(t, u):
    d, a, b = t
    if d > 1 and math.gcd(d, math.gcd(a, b)) != 1 or math.gcd(u, d) != 1:
        return
    assert normalize(CyclicQuotient(d, a, b)) == normalize(CyclicQuotient(d, u * a, u * b))


@given(st.integers(2, 80).flatmap(lambda d: st.tuples(st.just(d), st.integers(1, d - 1))))
def test_dual_reverses_bamboo(t):
    d, q = t
    if math.gcd(d, q) != 1:
        return
    n = NormalizedQuotient(d, q)
    assert selfs(resolve_bamboo(n.dual())) == selfs(resolve_bamboo(n))[::-1]
    # swapping the coordinates gives the dual
    assert normalize(CyclicQuotient(d, q, 1)) == n.dual()
