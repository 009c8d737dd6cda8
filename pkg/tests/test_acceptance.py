"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All comparisons are exact (integers or rationals).  Runtime ceilings are
pinned per criterion and checked on wall-clock time.
"""

import random
import time
from itertools import combinations

import pytest

from conftest import ALGEBRAS, CORPUS, FIELDS
from oracles import cayley_spheres, coxeter_matrices
from test_groupprod import s3
from graphprod.barcomplex import check_acyclic_full, tor_dims_bar, tor_dims_polyhedral
from graphprod.complex import all_graphs, cycle, discrete, path, simplex, square
from graphprod.exactmath import GF, QQ, RationalFunction, series_invert
from graphprod.galg import GraphProductAlgebra, free
from graphprod.groupprod import GraphProduct, LocalGroup, WordSpace, Z2, certify_word_problem
from graphprod.homology import reduced_homology
from graphprod.torform import alternating_tor_series, ep_series_AK, ep_series_Aprime, tor_AK_closed, tor_Aprime_closed

RESULTS: list[str] = []

LIMIT_SQUARE_SERIES = 5.0
LIMIT_MIXED_SERIES = 5.0
LIMIT_TOR = 600.0
LIMIT_WORDS = 600.0
LIMIT_CHORDAL = 120.0

TOR_S, TOR_N = 4, 8
ACYCLIC_S, ACYCLIC_N = 8, 8
SERIES_N = 8
WORD_LEN = 6
BALL_RADIUS = 5
TRIPLES = 10_000
CENSUS_N = 6


def report(num, title, ok, detail):
    line = f"criterion {num:>2} {'PASS' if ok else 'FAIL'}  {title}  [{detail}]"
    RESULTS.append(line)
    print(line)
    assert ok, line


def graphs_up_to(m_max):
    for m in range(1, m_max + 1):
        yield from all_graphs(m)


# 1 -------------------------------------------------------------------------


def test_criterion_01_square_series():
    t0 = time.perf_counter()
    expected = [1, 4, 12, 32, 80, 192, 448, 1024, 2304]
    K, A = square(), free(1)
    ep = ep_series_Aprime(K, A, SERIES_N).series  # P(A')
    route_a = ep
    for _ in K.vertices:
        route_a = route_a * A.series(SERIES_N)
    route_b = GraphProductAlgebra(K, A).basis_counts(SERIES_N)
    route_c = RationalFunction((1,), (1, -4, 4)).expand(SERIES_N)
    dt = time.perf_counter() - t0
    ok = route_a.as_ints() == route_b == route_c.as_ints() == expected and dt < LIMIT_SQUARE_SERIES
    report(1, "square/free(1) Hilbert series, three routes", ok, f"degree<= {SERIES_N}, exact, {dt:.2f}s < {LIMIT_SQUARE_SERIES}s")


# 2 -------------------------------------------------------------------------


def test_criterion_02_mixed_degree_series():
    t0 = time.perf_counter()
    algs = [free(1), free(2), free(1), free(2)]
    K = square()
    route_a = ep_series_AK(K, algs, SERIES_N).as_ints()
    route_b = GraphProductAlgebra(K, algs).basis_counts(SERIES_N)
    target = RationalFunction((1,), (1, -2, -2, 4)).expand(SERIES_N).as_ints()
    dt = time.perf_counter() - t0
    ok = route_a == route_b == target and dt < LIMIT_MIXED_SERIES
    report(2, "square with degrees (1,2,1,2), series routes", ok, f"{target}, {dt:.2f}s < {LIMIT_MIXED_SERIES}s")


# 3 -------------------------------------------------------------------------


def test_criterion_03_tor_oracle_equivalence():
    t0 = time.perf_counter()
    bad = []
    n_cases = 0
    for fname, F in FIELDS.items():
        for kname, K in CORPUS.items():
            for aname, A in ALGEBRAS.items():
                pairs = (
                    ("aprime", tor_Aprime_closed(K, A, TOR_S, TOR_N, F)),
                    ("ak", tor_AK_closed(K, A, TOR_S, TOR_N, F)),
                )
                for variant, closed in pairs:
                    oracle = tor_dims_polyhedral(K, A, TOR_S, TOR_N, F, variant)
                    n_cases += 1
                    if closed.dims != {k: v for k, v in oracle.dims.items() if v} or not closed.same_values(oracle):
                        bad.append((fname, kname, aname, variant))
    dt = time.perf_counter() - t0
    ok = not bad and dt < LIMIT_TOR
    report(3, "closed-form Tor = bar-oracle Tor", ok, f"{n_cases} tables, s<={TOR_S}, n<={TOR_N}, mismatches={bad}, {dt:.1f}s < {LIMIT_TOR:.0f}s")


# 4 -------------------------------------------------------------------------


def test_criterion_04_word_problem():
    t0 = time.perf_counter()
    rng = random.Random(2024)
    stats = dict(graphs=0, words=0, mismatch=0, idem=0, assoc=0, proj=0, split=0, ball=0, oracle_pairs=0, oracle_bad=0, nf=0)
    spaces = {m: WordSpace({v: Z2 for v in range(1, m + 1)}, WORD_LEN) for m in range(1, 6)}
    graphs = list(graphs_up_to(5))
    per_graph = -(-TRIPLES // len(graphs))
    triples = 0
    for K in graphs:
        P = GraphProduct(K, Z2)
        space = spaces[K.m]
        r = certify_word_problem(P, space)
        stats["graphs"] += 1
        stats["words"] += r["words"]
        stats["mismatch"] += r["mismatches"]
        # idempotence on every element of length <= WORD_LEN
        ball = P.ball(WORD_LEN)
        for g in ball:
            stats["idem"] += P.normal_letters(g.letters) != g.letters
        stats["nf"] += len(ball)
        # associativity and projection multiplicativity on sampled triples
        for _ in range(per_graph):
            a, b, c = (P.normalize(P.random_word(rng.randint(0, WORD_LEN), rng)) for _ in range(3))
            stats["assoc"] += P.multiply(P.multiply(a, b), c) != P.multiply(a, P.multiply(b, c))
            ab = P.multiply(a, b)
            stats["proj"] += any(P.project(ab, i) != P.project(a, i) ^ P.project(b, i) for i in K.vertices)
            triples += 1
        # split: reconstruct and injective on the ball
        ball = [g for g in ball if len(g) <= BALL_RADIUS]
        seen = set()
        for g in ball:
            s = P.split(g)
            stats["split"] += P.unsplit(s) != g or not P.in_kernel(s.h)
            seen.add((s.h.letters, s.gammas))
        stats["split"] += len(seen) != len(ball)
        stats["ball"] += len(ball)
    # the breadth-first rewriting oracle agrees with the bulk classes
    for K in rng.sample([g for g in graphs if g.m >= 3], 12):
        P = GraphProduct(K, Z2)
        for _ in range(25):
            u = P.random_word(rng.randint(0, 4), rng)
            v = P.random_word(rng.randint(0, 4), rng)
            if rng.random() < 0.5:
                v = P.normal_letters(u)
            stats["oracle_pairs"] += 1
            stats["oracle_bad"] += P.equal_oracle(u, v) != (P.normal_letters(u) == P.normal_letters(v))
    dt = time.perf_counter() - t0
    failures = stats["mismatch"] + stats["idem"] + stats["assoc"] + stats["proj"] + stats["split"] + stats["oracle_bad"]
    ok = failures == 0 and triples >= TRIPLES and dt < LIMIT_WORDS
    report(
        4,
        "word problem for all-Z/2 products, m<=5",
        ok,
        f"{stats['graphs']} graphs, {stats['words']} words of length<={WORD_LEN}, {triples} triples, "
        f"{stats['nf']} normal forms re-normalized, {stats['ball']} ball elements (radius {BALL_RADIUS}), {stats['oracle_pairs']} BFS oracle pairs, "
        f"failures={failures}, {dt:.1f}s < {LIMIT_WORDS:.0f}s",
    )


# 5 -------------------------------------------------------------------------


def test_criterion_05_kernel_generators():
    bad = 0
    total = 0
    for K in graphs_up_to(5):
        for G in (Z2, LocalGroup.cyclic(3)):
            if K.m == 5 and G is not Z2:
                continue
            P = GraphProduct(K, G)
            for g in P.kernel_generators():
                total += 1
                bad += not P.in_kernel(g)
    path_gens = GraphProduct(path(3), Z2).kernel_generators()
    sq = GraphProduct(square(), Z2)
    sq_gens = sq.kernel_generators()
    commute = len(sq_gens) == 2 and sq.multiply(*sq_gens) == sq.multiply(*reversed(sq_gens))
    complete = all(not GraphProduct(simplex(m), Z2).kernel_generators() for m in range(1, 7))
    ok = bad == 0 and len(path_gens) == 1 and len(path_gens[0]) == 4 and commute and complete
    report(5, "kernel generators", ok, f"{total} generators checked in ker(ab), path-3: {len(path_gens)}, square: {len(sq_gens)} commuting, complete: 0")


# 6 -------------------------------------------------------------------------


def test_criterion_06_length_census():
    bad = []
    n = 0
    entries = [(k, K, G) for k, K in CORPUS.items() for G in (Z2, LocalGroup.cyclic(3))]
    entries += [("path3", path(3), s3()), ("points2", discrete(2), s3())]
    for kname, K, G in entries:
        c = GraphProduct(K, G).length_census(CENSUS_N)
        n += 1
        if c["counts"] != c["predicted"]:
            bad.append((kname, G))
    # an independent enumeration for the Coxeter cases
    for kname, K in CORPUS.items():
        if GraphProduct(K, Z2).length_census(CENSUS_N)["counts"] != cayley_spheres(coxeter_matrices(K), CENSUS_N):
            bad.append((kname, "reflection rep"))
    report(6, "length census = support-word prediction", not bad, f"{n} products, n<={CENSUS_N}, mismatches={bad}")


# 7 -------------------------------------------------------------------------


def test_criterion_07_acyclicity():
    t0 = time.perf_counter()
    bad = []
    chains = 0
    for fname, F in FIELDS.items():
        for kname, K in CORPUS.items():
            for aname, A in ALGEBRAS.items():
                r = check_acyclic_full(K, A, ACYCLIC_S, ACYCLIC_N, F)
                chains += sum(r.sizes.values())
                if not r.ok:
                    bad.append((fname, kname, aname, r.homology))
    dt = time.perf_counter() - t0
    report(
        7,
        "full resolution over A^K is acyclic (d^2=0 asserted on every build)",
        not bad,
        f"{3 * len(CORPUS) * len(ALGEBRAS)} complexes, s<={ACYCLIC_S}, n<={ACYCLIC_N}, {chains} chains, failures={bad}, {dt:.1f}s",
    )


# 8 -------------------------------------------------------------------------


def test_criterion_08_homology_sanity():
    bad = []
    for F in FIELDS.values():
        for m in range(4, 8):
            if {d: b for d, b in reduced_homology(cycle(m), F).dims.items() if b} != {1: 1}:
                bad.append(("cycle", m))
        for m in range(1, 6):
            want = {0: m - 1} if m > 1 else {}
            if {d: b for d, b in reduced_homology(discrete(m), F).dims.items() if b} != want:
                bad.append(("points", m))
        if reduced_homology(square(), F)[1] != 1:
            bad.append("square")
    subsets = 0
    for kname, K in CORPUS.items():
        for r in range(1, K.m + 1):
            for I in combinations(K.vertices, r):
                KI = K.full_subcomplex(I)
                chi = sum((-1) ** (len(s) - 1) for s in KI.simplices())
                profiles = [reduced_homology(KI, F) for F in FIELDS.values()]
                if any(p.euler_characteristic() != chi for p in profiles) or len({tuple(sorted(p.dims.items())) for p in profiles}) != 1:
                    bad.append((kname, I))
                subsets += 1
        for v in K.vertices:
            if not reduced_homology(K.split_star(v)[0], QQ).is_acyclic():
                bad.append((kname, "star", v))
    report(8, "homology profiles, Euler identity, cone acyclicity", not bad, f"{subsets} full subcomplexes x 3 fields, failures={bad}")


# 9 -------------------------------------------------------------------------


def test_criterion_09_chordality():
    t0 = time.perf_counter()
    bad = 0
    count = 0
    for K in all_graphs(5):
        h1_free = all(
            reduced_homology(K.full_subcomplex(I), GF(2))[1] == 0
            for r in range(1, 6)
            for I in combinations(K.vertices, r)
        )
        bad += K.is_chordal() != h1_free
        count += 1
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < LIMIT_CHORDAL
    report(9, "chordal <=> H~_1(K_I)=0 for all I", ok, f"{count} graphs on 5 vertices, mismatches={bad}, {dt:.1f}s < {LIMIT_CHORDAL:.0f}s")


# 10 ------------------------------------------------------------------------


def test_criterion_10_alternating_tor():
    bad = []
    n = 0
    for aname, A in ALGEBRAS.items():
        T = tor_dims_bar(A, SERIES_N, SERIES_N, QQ)
        n += 1
        if series_invert(A.series(SERIES_N)) != alternating_tor_series(T, SERIES_N):
            bad.append(aname)
    for kname, K in CORPUS.items():
        for aname, A in ALGEBRAS.items():
            # every generator has positive degree, so s <= n covers all of Tor through degree 8
            T = tor_dims_polyhedral(K, A, SERIES_N, SERIES_N, GF(3), "ak")
            lhs = series_invert(GraphProductAlgebra(K, A).hilbert_series(SERIES_N))
            n += 1
            if lhs != alternating_tor_series(T, SERIES_N):
                bad.append((kname, aname))
    report(10, "1/P(A) = sum_s (-1)^s P(Tor_s)", not bad, f"{n} algebras, degree<={SERIES_N}, oracle Tor tables, failures={bad}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
