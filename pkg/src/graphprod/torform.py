"""Closed-form Tor tables, Euler-Poincaré series and generator sets for graph
products of graded algebras.

With ``A'`` the kernel of ``A^K -> ⊗ A_i``:

* ``Tor^{A'}_{s,n} = sum_I dim H~_{s-1}(K_I) [t^n] prod_{i in I} P(J(A_i))``;
* ``Tor^{A^K}`` is the polyhedral product over ``K`` of the component tables;
* ``1/P(A') = 1 + sum_{I != ∅} sum_s (-1)^s dim H~_{s-1}(K_I) prod_{i in I} P(J(A_i))``
  and ``P(A^K) = P(A') prod_i P(A_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .barcomplex import TorTable, tor_dims_bar
from .complex import FlagComplex
from .errors import TruncationError
from .exactmath import QQ, Field, TruncatedSeries, series_invert, series_mul
from .galg import GradedAlgebraSpec
from .homology import reduced_homology


def _algebras(K: FlagComplex, algebras) -> dict:
    if isinstance(algebras, GradedAlgebraSpec):
        return {v: algebras for v in K.vertices}
    if isinstance(algebras, dict):
        return dict(algebras)
    return dict(zip(K.vertices, algebras))


def _subset_profiles(K: FlagComplex, field: Field, s_max: int | None = None):
    """``(I, {d: dim H~_d(K_I)})`` for nonempty ``I`` with some nonzero entry.

    Subsets are skipped early: a connected ``K_I`` only matters for ``s >= 2``,
    and a full simplex never contributes.
    """
    for r in range(1, K.m + 1):
        for I in combinations(K.vertices, r):
            KI = K.full_subcomplex(I)
            if KI.maximal_is_full_simplex():
                continue
            connected = KI.is_connected()
            if connected and s_max is not None and s_max < 2:
                continue
            prof = reduced_homology(KI, field)
            dims = {d: b for d, b in prof.dims.items() if b}
            if dims:
                yield I, dims


def _product_J(algs: dict, I, N: int) -> TruncatedSeries:
    out = TruncatedSeries.one(N)
    for i in I:
        out = series_mul(out, algs[i].augmentation_series(N))
    return out


def tor_Aprime_closed(K: FlagComplex, algebras, s_max: int, n_max: int, field: Field = QQ) -> TorTable:
    algs = _algebras(K, algebras)
    dims = {(0, 0): 1}
    for I, hom in _subset_profiles(K, field, s_max):
        J = _product_J(algs, I, n_max)
        for d, b in hom.items():
            s = d + 1
            if s > s_max:
                continue
            for n in range(n_max + 1):
                c = int(J[n]) * b
                if c:
                    dims[(s, n)] = dims.get((s, n), 0) + c
    return TorTable(dims, s_max, n_max, "closed-form")


def component_tor_tables(algs: dict, s_max: int, n_max: int, field: Field) -> dict:
    """Bar-oracle Tor table for each distinct algebra (shared by identity)."""
    cache: dict = {}
    out = {}
    for v, A in algs.items():
        if id(A) not in cache:
            cache[id(A)] = tor_dims_bar(A, s_max, n_max, field)
        out[v] = cache[id(A)]
    return out


def tor_AK_closed(
    K: FlagComplex, algebras, s_max: int, n_max: int, field: Field = QQ, tables: dict | None = None
) -> TorTable:
    """Polyhedral product of component Tor tables: sum over simplices ``σ`` and
    over splittings with every ``s_i >= 1``."""
    algs = _algebras(K, algebras)
    if tables is None:
        tables = component_tor_tables(algs, s_max, n_max, field)
    for v, T in tables.items():
        if T.s_max < s_max or T.n_max < n_max:
            raise TruncationError(f"component table at vertex {v} is too small")
    # reduced tables: only s >= 1
    red = {v: {k: c for k, c in T.dims.items() if k[0] >= 1 and c} for v, T in tables.items()}
    dims = {(0, 0): 1}
    for sigma in K.simplices():
        if not sigma:
            continue
        acc = {(0, 0): 1}
        for v in sigma:
            nxt: dict = {}
            for (s1, n1), c1 in acc.items():
                for (s2, n2), c2 in red[v].items():
                    s, n = s1 + s2, n1 + n2
                    if s <= s_max and n <= n_max:
                        nxt[(s, n)] = nxt.get((s, n), 0) + c1 * c2
            acc = nxt
        for key, c in acc.items():
            dims[key] = dims.get(key, 0) + c
    return TorTable({k: v for k, v in dims.items() if v}, s_max, n_max, "closed-form")


@dataclass(frozen=True)
class EPSeries:
    inverse: TruncatedSeries  # 1 / P(A')
    series: TruncatedSeries  # P(A')


def ep_series_Aprime(K: FlagComplex, algebras, N: int, field: Field = QQ) -> EPSeries:
    algs = _algebras(K, algebras)
    inv = TruncatedSeries.one(N)
    for I, hom in _subset_profiles(K, field):
        J = _product_J(algs, I, N)
        for d, b in hom.items():
            s = d + 1
            inv = inv + J.scale((-1) ** s * b)
    return EPSeries(inv, series_invert(inv))


def ep_series_AK(K: FlagComplex, algebras, N: int, field: Field = QQ) -> TruncatedSeries:
    algs = _algebras(K, algebras)
    out = ep_series_Aprime(K, algs, N, field).series
    for v in K.vertices:
        out = series_mul(out, algs[v].series(N))
    return out


def alternating_tor_series(T: TorTable, N: int) -> TruncatedSeries:
    """``sum_s (-1)^s P(Tor_s; t)`` through degree ``N``.

    Only complete when the table covers every ``s`` that can occur below
    degree ``N``.
    """
    if T.n_max < N:
        raise TruncationError("Tor table does not reach degree N")
    cs = [Fraction(0)] * (N + 1)
    for (s, n), c in T.dims.items():
        if n <= N:
            cs[n] += (-1) ** s * c
    return TruncatedSeries(cs, N)


# ---------------------------------------------------------------------------
# generators and freeness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Bracket:
    """``[x_{i_1}, [..., [x_{i_n}, x_t]]]`` with ``t`` omitted from the outer list."""

    subset: tuple
    t: int
    entries: tuple  # ((vertex, basis name), ...) outermost first, innermost last
    degree: int

    def __str__(self):
        *outer, (vt, xt) = self.entries
        s = f"{xt}@{vt}"
        for v, x in reversed(outer):
            s = f"[{x}@{v}, {s}]"
        return s


def min_generators_Aprime(K: FlagComplex, algebras, n_max: int) -> list[Bracket]:
    """Iterated brackets spanning ``Tor^{A'}_{1,*}`` up to internal degree ``n_max``.

    For every ``I`` with ``K_I`` disconnected and every ``t`` that is the least
    vertex of a component avoiding ``max(I)``, one bracket per choice of
    positive-degree basis elements ``x_i``, ``i in I``.
    """
    algs = _algebras(K, algebras)
    out = []
    for r in range(2, K.m + 1):
        for I in combinations(K.vertices, r):
            comps = K.full_subcomplex(I).components()
            if len(comps) < 2:
                continue
            top = I[-1]
            ts = [c[0] for c in comps if top not in c]
            choices = []
            for v in I:
                A = algs[v]
                choices.append([(x, A.degree[x]) for x in A.positive if A.degree[x] <= n_max])

            def walk(k, acc, deg):
                if k == len(I):
                    for t in ts:
                        outer = tuple((v, x) for v, x in acc if v != t)
                        inner = next((v, x) for v, x in acc if v == t)
                        out.append(Bracket(I, t, outer + (inner,), deg))
                    return
                for x, dx in choices[k]:
                    if deg + dx <= n_max:
                        walk(k + 1, acc + ((I[k], x),), deg + dx)

            walk(0, (), 0)
    return out


def generator_counts(gens: list[Bracket], n_max: int) -> list[int]:
    counts = [0] * (n_max + 1)
    for g in gens:
        counts[g.degree] += 1
    return counts


def is_free_Aprime(K: FlagComplex, field: Field = QQ) -> bool:
    """``A'`` is free iff ``H~_1(K_I) = 0`` for every full subcomplex."""
    for r in range(4, K.m + 1):  # a flag complex needs 4 vertices for H~_1
        for I in combinations(K.vertices, r):
            if reduced_homology(K.full_subcomplex(I), field)[1]:
                return False
    return True


def is_free_H_groups(K: FlagComplex) -> bool:
    """The kernel of ``ab`` is free on the iterated commutators iff ``K`` is chordal."""
    return K.is_chordal()

