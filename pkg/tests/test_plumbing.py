import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wpsing.errors import ArgumentError, ConsistencyError, StateError
from wpsing.exactmath import det_exact, hj_evaluate, hj_expansion
from wpsing.plumbing import (
    Edge,
    PlumbingGraph,
    Vertex,
    classify_link,
    cycle_rank,
    det_singularity,
    intersection_matrix,
    is_negative_definite,
    leading_minors,
    solve_self_intersections,
)


def star(center, arms):
    """Rational star: central vertex ``center`` and bamboo arms of integer weights."""
    verts = [Vertex(self_intersection=center)]
    edges = []
    for arm in arms:
        prev = 0
        for b in arm:
            verts.append(Vertex(self_intersection=-b))
            edges.append(Edge(prev, len(verts) - 1))
            prev = len(verts) - 1
    return PlumbingGraph(verts, edges)


def test_e8_is_a_homology_sphere():
    g = star(-2, [[2], [2, 2], [2, 2, 2, 2]])
    assert len(g) == 8
    assert det_singularity(g) == 1
    c = classify_link(g)
    assert (c.rank_H1, c.torsion_order, c.is_QHS, c.is_ZHS) == (0, 1, True, True)


def test_bamboo_examples():
    assert det_singularity(PlumbingGraph.bamboo([-2, -2])) == 3
    assert det_singularity(PlumbingGraph.bamboo([-2] * 6)) == 7
    assert det_singularity(PlumbingGraph.bamboo([-3, -2])) == 5
    assert det_singularity(PlumbingGraph.bamboo([])) == 1


def test_genus_and_cycles_raise_rank():
    g = PlumbingGraph([Vertex(genus=1, self_intersection=-1)], [])
    c = classify_link(g)
    assert c.rank_H1 == 2 and not c.is_QHS and not c.is_ZHS
    tri = PlumbingGraph([Vertex(self_intersection=-3)] * 3, [Edge(0, 1), Edge(1, 2), Edge(2, 0)])
    assert cycle_rank(tri) == 1
    assert classify_link(tri).rank_H1 == 1


def test_not_negative_definite():
    g = PlumbingGraph.bamboo([-1, -1])
    assert not is_negative_definite(intersection_matrix(g))
    with pytest.raises(ConsistencyError):
        det_singularity(g)
    assert not is_negative_definite([[0]])
    assert leading_minors([[0, 1], [1, 0]]) == [0]


def test_orders_enter_the_determinant():
    # -1/6 curve with points of order 2 and 3: det = 1/6 * 6
    g = PlumbingGraph([Vertex(self_intersection=Fraction(-1, 6), orders=(2, 3))], [])
    assert det_singularity(g) == 1
    g = PlumbingGraph([Vertex(self_intersection=Fraction(-1, 4), orders=(2,))], [])
    with pytest.raises(ConsistencyError):
        det_singularity(g)


def test_missing_self_intersection():
    g = PlumbingGraph([Vertex()], [])
    with pytest.raises(StateError):
        intersection_matrix(g)


def test_validation():
    with pytest.raises(ArgumentError):
        Vertex(genus=-1)
    with pytest.raises(ArgumentError):
        Vertex(orders=(0,))
    with pytest.raises(ArgumentError):
        Edge(1, 1)
    with pytest.raises(ArgumentError):
        Edge(0, 1, 0)
    with pytest.raises(ArgumentError):
        PlumbingGraph([Vertex()], [Edge(0, 1)])


def test_solve_self_intersections():
    # E_v . (sum N_u E_u) + contact_v = 0 at every vertex
    verts = [Vertex(multiplicity=2, contact=1), Vertex(multiplicity=3, contact=0),
             Vertex(multiplicity=5, contact=Fraction(1, 2))]
    edges = [Edge(0, 1), Edge(1, 2, Fraction(1, 3))]
    g = solve_self_intersections(PlumbingGraph(verts, edges))
    A = intersection_matrix(g)
    N = [v.multiplicity for v in g.vertices]
    for i, v in enumerate(g.vertices):
        assert sum(A[i][j] * N[j] for j in range(3)) + v.contact == 0
    with pytest.raises(ArgumentError):
        solve_self_intersections(PlumbingGraph([Vertex(multiplicity=0)], []))


def test_leading_minors_match_det():
    A = [[-3, 1, 0], [1, -2, 1], [0, 1, -4]]
    minors = leading_minors(A)
    for k in range(1, 4):
        assert minors[k - 1] == det_exact([row[:k] for row in A[:k]])


coprime_pair = st.tuples(st.integers(2, 12), st.integers(1, 11)).filter(
    lambda t: t[1] < t[0] and math.gcd(*t) == 1)


@given(st.integers(1, 5), st.lists(coprime_pair, min_size=1, max_size=4))
def test_splicing_bamboos_matches_rational_vertex(b0, arms):
    """Schur complement: the integral star equals one rational vertex with
    cyclic quotient points, self-intersection ``-b0 + sum q/d``."""
    integral = star(-b0, [hj_expansion(d, q) for d, q in arms])
    for d, q in arms:
        assert hj_evaluate(hj_expansion(d, q)) == Fraction(d, q)
    selfint = -b0 + sum(Fraction(q, d) for d, q in arms)
    rational = PlumbingGraph([Vertex(self_intersection=selfint, orders=tuple(d for d, _ in arms))], [])
    try:
        expected = det_singularity(integral)
    except ConsistencyError:
        with pytest.raises(ConsistencyError):
            det_singularity(rational)
        return
    assert det_singularity(rational) == expected


def test_json_roundtrip():
    g = PlumbingGraph(
        [Vertex(1, Fraction(-7, 3), (2, 3), Fraction(1, 2), 4), Vertex(0, None)],
        [Edge(0, 1, Fraction(1, 5))])
    text = g.to_json()
    assert PlumbingGraph.from_json(text) == g
    assert '"self": "-7/3"' in text and '"self": null' in text


@pytest.mark.parametrize("text", ["[1]", "{", '{"vertices": [{"genus": 0}], "edges": [{"u": 0}]}'])
def test_json_errors(text):
    with pytest.raises(ArgumentError):
        PlumbingGraph.from_json(text)
