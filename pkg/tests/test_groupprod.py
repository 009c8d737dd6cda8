import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cayley_spheres, coxeter_element, coxeter_matrices
from graphprod.complex import all_graphs, cycle, discrete, flag_complete, path, simplex, square
from graphprod.errors import ValidationError
from graphprod.groupprod import (
    GraphProduct,
    LocalGroup,
    WordSpace,
    Z2,
    certify_word_problem,
)

S3_NAMES = ["e", "r", "rr", "s", "sr", "srr"]


def s3():
    # permutations of {0,1,2}; r = 3-cycle, s = transposition
    perms = {"e": (0, 1, 2), "r": (1, 2, 0), "rr": (2, 0, 1), "s": (1, 0, 2)}
    comp = lambda p, q: tuple(p[q[i]] for i in range(3))
    perms["sr"] = comp(perms["s"], perms["r"])
    perms["srr"] = comp(perms["s"], perms["rr"])
    inv = {v: k for k, v in perms.items()}
    table = [[inv[comp(perms[a], perms[b])] for b in S3_NAMES] for a in S3_NAMES]
    return LocalGroup.from_table(S3_NAMES, table, "e")


def test_table_axioms_checked():
    with pytest.raises(ValidationError):
        LocalGroup.from_table(["e", "a"], [["e", "a"], ["a", "a"]], "e")  # no inverse for a
    G = s3()
    assert G.order == 6 and G.name(G.mul(G.parse("r"), G.parse("r"))) == "rr"


def test_parse_rejects_foreign_elements():
    with pytest.raises(ValidationError):
        LocalGroup.cyclic(3).parse(5)
    with pytest.raises(ValidationError):
        s3().parse("t")


def test_normal_form_is_unique_on_path():
    # two different single-swap-minimal spellings of one element
    P = GraphProduct(path(3), Z2)
    a = P.normalize([(3, 1), (1, 1), (2, 1)])
    b = P.normalize([(2, 1), (3, 1), (1, 1)])
    assert a == b
    assert a.support == (2, 3, 1)


def test_nonreduced_word_is_reduced():
    # 2 commutes with both neighbours, so the two copies of 2 cancel
    P = GraphProduct(path(3), Z2)
    assert P.normalize([(2, 1), (3, 1), (1, 1), (2, 1)]).support == (3, 1)


def test_square_inverse_and_identity():
    P = GraphProduct(square(), Z2)
    w = P.word((1, 1), (3, 1), (2, 1))
    assert P.multiply(w, P.invert(w)).is_identity()
    assert P.power(w, 0).is_identity()


def test_free_abelian_on_complete_graph():
    P = GraphProduct(simplex(3), LocalGroup.integers())
    w = P.normalize([(3, 2), (1, 1), (2, -1), (1, 4), (3, -2)])
    assert w.letters == ((1, 5), (2, -1))


def test_free_group_on_points():
    P = GraphProduct(discrete(2), LocalGroup.integers())
    w = P.normalize([(1, 1), (2, 1), (1, -1)])
    assert len(w) == 3
    assert P.equal_oracle([(1, 1), (2, 1), (1, -1)], [(2, 1)]) is False


def random_word(P, n, rng):
    return P.random_word(n, rng)


@pytest.mark.parametrize("m", [3, 4])
def test_coxeter_representation_agrees(m):
    rng = random.Random(m)
    for K in list(all_graphs(m))[:: 3 if m == 4 else 1]:
        P = GraphProduct(K, Z2)
        mats = coxeter_matrices(K)
        words = [P.random_word(rng.randint(0, 7), rng) for _ in range(60)]
        nfs = [P.normal_letters(w) for w in words]
        elems = [coxeter_element(mats, w).tobytes() for w in words]
        for i, j in combinations(range(len(words)), 2):
            assert (nfs[i] == nfs[j]) == (elems[i] == elems[j])
        # and normal forms evaluate to the same matrices as the input
        for w, y in zip(words, nfs):
            assert np.array_equal(coxeter_element(mats, w), coxeter_element(mats, y))


@pytest.mark.parametrize("K", [square(), path(3), cycle(5), discrete(3), simplex(3)], ids=repr)
def test_length_census_matches_cayley_graph(K):
    P = GraphProduct(K, Z2)
    census = P.length_census(6)
    assert census["counts"] == census["predicted"] == cayley_spheres(coxeter_matrices(K), 6)


def test_square_census_values():
    c = GraphProduct(square(), Z2).length_census(6)["counts"]
    assert c == [1, 4, 8, 12, 16, 20, 24]


def test_census_with_larger_groups():
    P = GraphProduct(path(3), [LocalGroup.cyclic(3), s3(), Z2])
    c = P.length_census(5)
    assert c["counts"] == c["predicted"]


def test_word_space_certifies_z3():
    groups = {v: LocalGroup.cyclic(3) for v in (1, 2, 3)}
    space = WordSpace(groups, 4)
    for K in all_graphs(3):
        r = certify_word_problem(GraphProduct(K, groups), space)
        assert r["mismatches"] == 0


def test_equal_oracle_agrees_with_normal_forms():
    rng = random.Random(7)
    P = GraphProduct(path(3), Z2)
    for _ in range(40):
        u = P.random_word(rng.randint(0, 4), rng)
        v = P.random_word(rng.randint(0, 4), rng)
        assert P.equal_oracle(u, v) == (P.normal_letters(u) == P.normal_letters(v))


def test_equal_oracle_finds_nontrivial_equalities():
    P = GraphProduct(square(), Z2)
    assert P.equal_oracle([(1, 1), (2, 1), (1, 1)], [(2, 1)])
    assert P.equal_oracle([(2, 1), (1, 1)], [(1, 1), (2, 1)])


def test_equal_oracle_bound_guard():
    P = GraphProduct(square(), Z2)
    with pytest.raises(ValidationError):
        P.equal_oracle([(1, 1)] * 9, [])


def test_kernel_generators_examples():
    P = GraphProduct(path(3), Z2)
    gens = P.kernel_generators()
    assert [g.letters for g in gens] == [((3, 1), (1, 1), (3, 1), (1, 1))]
    sq = GraphProduct(square(), Z2)
    a, b = sq.kernel_generators()
    assert sq.multiply(a, b) == sq.multiply(b, a)
    assert GraphProduct(simplex(4), Z2).kernel_generators() == []


def test_kernel_generators_need_subset_for_integers():
    P = GraphProduct(discrete(2), LocalGroup.integers())
    with pytest.raises(ValidationError):
        P.kernel_generators()
    gens = P.kernel_generators({1: [1], 2: [1]})
    assert len(gens) == 1 and P.in_kernel(gens[0])


def test_kernel_generators_in_kernel_with_tables():
    P = GraphProduct(path(3), [s3(), LocalGroup.cyclic(3), Z2])
    gens = P.kernel_generators()
    assert gens and all(P.in_kernel(g) for g in gens)


# ---------------------------------------------------------------------------
# properties over random graphs and words
# ---------------------------------------------------------------------------


def graph_and_groups(draw_groups):
    @st.composite
    def strat(draw):
        m = draw(st.integers(1, 5))
        edges = draw(st.sets(st.tuples(st.integers(1, m), st.integers(1, m)).filter(lambda e: e[0] < e[1])))
        K = flag_complete(m, edges)
        gs = [draw(draw_groups) for _ in range(m)]
        return GraphProduct(K, gs)

    return strat()


local_groups = st.sampled_from([Z2, LocalGroup.cyclic(3), LocalGroup.integers(), s3()])


@st.composite
def product_and_words(draw, k=3):
    P = draw(graph_and_groups(local_groups))
    seed = draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    ws = [P.normalize(P.random_word(rng.randint(0, 6), rng)) for _ in range(k)]
    return P, ws


@settings(max_examples=80, deadline=None)
@given(product_and_words())
def test_group_axioms(pw):
    P, (a, b, c) = pw
    assert P.multiply(P.multiply(a, b), c) == P.multiply(a, P.multiply(b, c))
    assert P.multiply(a, P.identity) == a
    assert P.multiply(P.invert(a), a).is_identity()


@settings(max_examples=80, deadline=None)
@given(product_and_words(k=2))
def test_normal_form_properties(pw):
    P, (a, b) = pw
    assert P.normalize(a.letters) == a
    assert P.is_normal(a.letters)
    assert P.is_locally_minimal(a.letters)
    for i in P.K.vertices:
        G = P.groups[i]
        assert P.project(P.multiply(a, b), i) == G.mul(P.project(a, i), P.project(b, i))


@settings(max_examples=80, deadline=None)
@given(product_and_words(k=1))
def test_split_round_trip(pw):
    P, (a,) = pw
    s = P.split(a)
    assert P.in_kernel(s.h)
    assert P.unsplit(s) == a


@settings(max_examples=40, deadline=None)
@given(product_and_words(k=1), st.integers(0, 10**6))
def test_shuffled_spellings_agree(pw, seed):
    # swapping adjacent commuting letters never changes the normal form
    P, (a,) = pw
    rng = random.Random(seed)
    w = list(a.letters)
    for _ in range(20):
        if len(w) < 2:
            break
        k = rng.randrange(len(w) - 1)
        if w[k][0] != w[k + 1][0] and P.K.adjacent(w[k][0], w[k + 1][0]):
            w[k], w[k + 1] = w[k + 1], w[k]
    assert P.normalize(w) == a
