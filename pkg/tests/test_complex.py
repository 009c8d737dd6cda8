from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphprod.complex import (
    all_graphs,
    cycle,
    discrete,
    flag_complete,
    path,
    simplex,
    square,
    triangle_with_pendant,
)
from graphprod.errors import ValidationError


def brute_cliques(K):
    """Every vertex subset whose members are pairwise adjacent."""
    vs = K.vertices
    out = set()
    for r in range(len(vs) + 1):
        for S in combinations(vs, r):
            if all(K.adjacent(a, b) for a, b in combinations(S, 2)):
                out.add(S)
    return out


def has_chordless_cycle(K):
    """An induced subgraph that is a cycle on >= 4 vertices."""
    for r in range(4, K.m + 1):
        for S in combinations(K.vertices, r):
            degs = [sum(K.adjacent(a, b) for b in S if b != a) for a in S]
            if all(d == 2 for d in degs) and K.full_subcomplex(S).is_connected():
                return True
    return False


def random_graph(m, bits):
    pairs = list(combinations(range(1, m + 1), 2))
    return flag_complete(m, [p for p, b in zip(pairs, bits) if b])


graphs = st.integers(1, 7).flatmap(
    lambda m: st.lists(st.booleans(), min_size=m * (m - 1) // 2, max_size=m * (m - 1) // 2).map(
        lambda bits: random_graph(m, bits)
    )
)


def test_edge_validation():
    with pytest.raises(ValidationError):
        flag_complete(3, [(1, 4)])
    with pytest.raises(ValidationError):
        flag_complete(3, [(2, 2)])


def test_duplicate_edges_collapse():
    assert len(flag_complete(3, [(1, 2), (2, 1)]).edges) == 1


def test_simplex_counts():
    assert simplex(4).num_simplices() == 16
    assert square().num_simplices() == 9
    assert triangle_with_pendant().dimension() == 2
    assert discrete(3).dimension() == 0


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_simplices_are_cliques(K):
    assert set(K.simplices()) == brute_cliques(K)


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_chordal_matches_chordless_cycle_search(K):
    assert K.is_chordal() == (not has_chordless_cycle(K))


@pytest.mark.parametrize("m", [3, 4])
def test_chordal_exhaustive_small(m):
    for K in all_graphs(m):
        assert K.is_chordal() == (not has_chordless_cycle(K))


def test_cycles_are_not_chordal():
    for m in range(4, 8):
        assert not cycle(m).is_chordal()
    assert cycle(3).is_chordal()
    assert path(5).is_chordal()


def test_all_graphs_count():
    assert sum(1 for _ in all_graphs(4)) == 64


@settings(max_examples=60, deadline=None)
@given(graphs, st.data())
def test_full_subcomplex_keeps_induced_edges(K, data):
    I = data.draw(st.lists(st.sampled_from(K.vertices), unique=True))
    KI = K.full_subcomplex(I)
    assert set(KI.vertices) == set(I)
    assert set(KI.simplices()) == {s for s in K.simplices() if set(s) <= set(I)}


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_components_partition(K):
    comps = K.components()
    assert sorted(v for c in comps for v in c) == list(K.vertices)
    for a, b in combinations(comps, 2):
        assert not any(K.adjacent(x, y) for x in a for y in b)


def test_lex_order_square():
    assert square().lex_order_simplices() == [(), (1,), (2,), (3,), (4,), (1, 2), (1, 4), (2, 3), (3, 4)]


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_lex_order_faces_first(K):
    order = K.lex_order_simplices()
    pos = {s: k for k, s in enumerate(order)}
    assert len(order) == K.num_simplices()
    for s in order:
        for k in range(len(s)):
            assert pos[s[:k] + s[k + 1:]] < pos[s]


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_split_star_covers(K):
    for v in K.vertices:
        star, rest, link = K.split_star(v)
        assert set(star.vertices) == {v, *K.neighbors(v)}
        assert set(rest.vertices) == set(K.vertices) - {v}
        assert set(link.vertices) == set(K.neighbors(v))
        # the two pieces cover K and meet in the link
        assert set(star.simplices()) | set(rest.simplices()) == set(K.simplices())
        assert set(star.simplices()) & set(rest.simplices()) == set(link.simplices())

