"""Normalized bar complexes and their polyhedral products, with exact homology.

Internal degree is preserved by every differential here, so each complex is
built one internal degree ``n`` at a time.  A bar word ``[a_1|...|a_s]`` with
positive-degree entries has ``n >= s * d_min``; hence the block of internal
degree ``n`` is finite and complete as long as ``n`` does not exceed the
truncation degree of the algebras.  Homology at ``(s, n)`` needs the block at
``(s + 1, n)``, so chains are always built one homological degree past the
last reported one.

Sign conventions.  For a single algebra the left bar resolution has

    d(a[a_1|...|a_s]) = (-1)^|a| a a_1 [a_2|...|a_s]
                        + sum_j (-1)^(|a| + |a_1| + ... + |a_j| + j) a[...|a_j a_{j+1}|...]

and ``k ⊗_A`` of it drops the first term.  Tensor products use
``d(c ⊗ c') = dc ⊗ c' + (-1)^tot(c) c ⊗ dc'`` with ``tot`` the internal degree
plus the number of bar entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .complex import FlagComplex
from .errors import ChainComplexError, TruncationError, ValidationError
from .exactmath import QQ, Field
from .galg import GradedAlgebraSpec, GraphProductAlgebra
from .linalg import compose_is_zero, rank


# ---------------------------------------------------------------------------
# tables and complexes
# ---------------------------------------------------------------------------


@dataclass
class TorTable:
    """``dims[(s, n)] = dim Tor_{s,n}`` for ``0 <= s <= s_max``, ``0 <= n <= n_max``."""

    dims: dict
    s_max: int
    n_max: int
    provenance: str = "closed-form"

    def __getitem__(self, key) -> int:
        s, n = key
        if not (0 <= s <= self.s_max and 0 <= n <= self.n_max):
            raise TruncationError(f"(s={s}, n={n}) outside the trusted range s<={self.s_max}, n<={self.n_max}")
        return self.dims.get((s, n), 0)

    def nonzero(self) -> dict:
        return {k: v for k, v in sorted(self.dims.items()) if v}

    def restrict(self, s_max: int, n_max: int) -> "TorTable":
        if s_max > self.s_max or n_max > self.n_max:
            raise TruncationError("cannot widen a Tor table")
        dims = {(s, n): v for (s, n), v in self.dims.items() if s <= s_max and n <= n_max}
        return TorTable(dims, s_max, n_max, self.provenance)

    def row(self, s: int) -> list[int]:
        return [self[s, n] for n in range(self.n_max + 1)]

    def same_values(self, other: "TorTable") -> bool:
        s_max = min(self.s_max, other.s_max)
        n_max = min(self.n_max, other.n_max)
        return all(
            self[s, n] == other[s, n] for s in range(s_max + 1) for n in range(n_max + 1)
        )

    def as_rows(self) -> dict:
        return {s: self.row(s) for s in range(self.s_max + 1)}


@dataclass
class BigradedChainComplex:
    """Blocks ``(s, n)`` with a basis and sparse boundary columns into ``(s-1, n)``."""

    field: Field
    s_max: int
    n_max: int
    bases: dict = dc_field(default_factory=dict)
    boundary: dict = dc_field(default_factory=dict)
    trusted: Callable = None

    def basis(self, s: int, n: int) -> list:
        return self.bases.get((s, n), [])

    def dim(self, s: int, n: int) -> int:
        return len(self.bases.get((s, n), ()))

    def is_trusted(self, s: int, n: int) -> bool:
        if self.trusted is not None:
            return self.trusted(s, n)
        return 0 <= s <= self.s_max and 0 <= n <= self.n_max

    def rank_d(self, s: int, n: int) -> int:
        cols = self.boundary.get((s, n))
        return rank(cols, self.field) if cols else 0

    def homology(self, s: int, n: int) -> int:
        if not self.is_trusted(s, n):
            raise TruncationError(f"(s={s}, n={n}) is outside the trusted range")
        return self.dim(s, n) - self.rank_d(s, n) - self.rank_d(s + 1, n)

    def homology_table(self, provenance: str = "bar-oracle") -> TorTable:
        dims = {}
        for n in range(self.n_max + 1):
            for s in range(self.s_max + 1):
                h = self.homology(s, n)
                if h:
                    dims[(s, n)] = h
        return TorTable(dims, self.s_max, self.n_max, provenance)

    def check_d_squared(self) -> None:
        for (s, n), cols in self.boundary.items():
            lower = self.boundary.get((s - 1, n))
            if not cols or not lower:
                continue
            if not compose_is_zero(cols, lambda j: lower[j], self.field):
                raise ChainComplexError(f"d^2 != 0 at (s={s}, n={n})")

    def sizes(self) -> dict:
        return {k: len(v) for k, v in sorted(self.bases.items()) if v}


def _assemble(field, s_max, n_max, blocks, diff) -> BigradedChainComplex:
    """Index the basis blocks and apply ``diff(key) -> {key': coeff}``."""
    cx = BigradedChainComplex(field, s_max, n_max)
    index = {}
    for (s, n), keys in blocks.items():
        keys = sorted(keys)
        cx.bases[(s, n)] = keys
        index[(s, n)] = {k: j for j, k in enumerate(keys)}
    for (s, n), keys in cx.bases.items():
        if s == 0:
            continue
        target = index.get((s - 1, n), {})
        cols = []
        for key in keys:
            col = {}
            for k2, c in diff(key).items():
                if c:
                    if k2 not in target:
                        raise ChainComplexError(f"boundary of {key!r} leaves the complex: {k2!r}")
                    col[target[k2]] = c
            cols.append(col)
        cx.boundary[(s, n)] = cols
    cx.check_d_squared()
    return cx


# ---------------------------------------------------------------------------
# local data for one algebra
# ---------------------------------------------------------------------------


class _Local:
    """Bar words and coefficient elements of one algebra, by internal degree."""

    def __init__(self, A: GradedAlgebraSpec, field: Field, n_max: int, s_cap: int):
        if n_max > A.N:
            raise TruncationError(f"n_max={n_max} exceeds the truncation degree {A.N} of {A.name}")
        self.A = A
        self.field = field
        self.deg = A.degree
        self.elems = {d: list(A.basis[d]) for d in range(n_max + 1)}
        # bars[(s, d)] = bar words with s entries and internal degree d
        bars = {(0, 0): [()]}
        for s in range(1, s_cap + 1):
            for d in range(n_max + 1):
                out = []
                for e in range(1, d + 1):
                    for prefix in bars.get((s - 1, d - e), ()):
                        for x in A.basis[e]:
                            out.append(prefix + (x,))
                if out:
                    bars[(s, d)] = out
        self.bars = bars

    def mul(self, x, y) -> dict:
        return self.A.mul(x, y, self.field)

    def bar_middle(self, bar: tuple, shift: int) -> list:
        """``[(sign, coeff, new_bar)]`` for the merging faces of ``bar``.

        ``shift`` is the degree of whatever sits left of the bar word (the
        coefficient), entering the sign ``|a| + |a_1| + ... + |a_j| + j``.
        """
        out = []
        deg = self.deg
        acc = shift
        for j in range(len(bar) - 1):
            acc += deg[bar[j]]
            sign = -1 if (acc + j + 1) % 2 else 1
            for z, c in self.mul(bar[j], bar[j + 1]).items():
                out.append((sign, c, bar[:j] + (z,) + bar[j + 2:]))
        return out


def _bar_degree(local: _Local, bar: tuple) -> int:
    return sum(local.deg[x] for x in bar)


# ---------------------------------------------------------------------------
# single algebra
# ---------------------------------------------------------------------------


def bar_complex(A: GradedAlgebraSpec, s_max: int, n_max: int, field: Field = QQ) -> BigradedChainComplex:
    """Normalized bar construction ``k ⊗_A B(A)``; its homology is ``Tor^A(k, k)``."""
    if n_max > A.N:
        raise TruncationError(f"n_max={n_max} exceeds the truncation degree {A.N} of {A.name}")
    loc = _Local(A, field, n_max, s_max + 1)
    blocks = {}
    for (s, d), words in loc.bars.items():
        if s <= s_max + 1:
            blocks[(s, d)] = words

    def diff(bar):
        f = field
        out: dict = {}
        for sign, c, w in loc.bar_middle(bar, 0):
            out[w] = f.add(out.get(w, f.zero), c if sign > 0 else f.neg(c))
        return out

    cx = _assemble(field, s_max, n_max, blocks, diff)
    return cx


def tor_dims_bar(A: GradedAlgebraSpec, s_max: int, n_max: int, field: Field = QQ) -> TorTable:
    return bar_complex(A, s_max, n_max, field).homology_table()


# ---------------------------------------------------------------------------
# polyhedral products
# ---------------------------------------------------------------------------


def _normalize_algebras(K: FlagComplex, algebras) -> dict:
    if isinstance(algebras, GradedAlgebraSpec):
        return {v: algebras for v in K.vertices}
    if isinstance(algebras, dict):
        if set(algebras) != set(K.vertices):
            raise ValidationError("algebras must be given for exactly the vertices of K")
        return dict(algebras)
    algebras = list(algebras)
    if len(algebras) != K.m:
        raise ValidationError(f"need {K.m} algebras, got {len(algebras)}")
    return dict(zip(K.vertices, algebras))


def _component_lists(loc: _Local, n_max: int, s_cap: int, with_coeff: bool) -> dict:
    """``comps[d]`` = list of ``(coeff, bar, s)`` of internal degree ``d``."""
    comps: dict = {d: [] for d in range(n_max + 1)}
    for (s, db), words in loc.bars.items():
        if s > s_cap:
            continue
        coeff_degrees = range(0, n_max - db + 1) if with_coeff else (0,)
        for e in coeff_degrees:
            for a in loc.elems.get(e, ()):
                for w in words:
                    comps[e + db].append((a, w, s))
    return comps


def _polyhedral_blocks(K, verts, comps, n_max, s_cap):
    """All tuples of components with bar-support a simplex, grouped by (s, n)."""
    blocks: dict = {}
    m = len(verts)

    for n in range(n_max + 1):
        def rec_n(k, n_left, s_tot, support, acc, n=n):
            if k == m:
                if n_left == 0:
                    blocks.setdefault((s_tot, n), []).append(tuple(acc))
                return
            v = verts[k]
            for d in range(n_left + 1):
                for a, w, s in comps[v][d]:
                    if s_tot + s > s_cap:
                        continue
                    if s and not all(K.adjacent(u, v) for u in support):
                        continue
                    acc.append((a, w))
                    rec_n(k + 1, n_left - d, s_tot + s, support + ((v,) if s else ()), acc)
                    acc.pop()

        rec_n(0, n, 0, (), [])
    return blocks


def polyhedral_bar(
    K: FlagComplex, algebras, s_max: int, n_max: int, field: Field = QQ, variant: str = "aprime"
) -> BigradedChainComplex:
    """Polyhedral product of bar complexes over ``K``.

    ``variant="aprime"``: tensor products of the left bar resolutions
    ``B(A_i)`` (coefficients in ``A_i``) whose bar support is a simplex; its
    homology is ``Tor^{A'}`` for ``A'`` the kernel of ``A^K -> ⊗ A_i``.
    ``variant="ak"``: coefficients are all 1; homology is ``Tor^{A^K}``.
    """
    variant = variant.lower().replace("-", "").replace("_", "")
    if variant not in ("aprime", "ak"):
        raise ValidationError(f"unknown polyhedral variant {variant!r}")
    with_coeff = variant == "aprime"
    algs = _normalize_algebras(K, algebras)
    verts = K.vertices
    s_cap = s_max + 1
    locs = {v: _Local(algs[v], field, n_max, s_cap) for v in verts}
    comps = {v: _component_lists(locs[v], n_max, s_cap, with_coeff) for v in verts}
    blocks = _polyhedral_blocks(K, verts, comps, n_max, s_cap)
    f = field

    def diff(key):
        out: dict = {}
        prefix_tot = 0
        for k, v in enumerate(verts):
            a, bar = key[k]
            loc = locs[v]
            da = loc.deg[a]
            sign0 = -1 if prefix_tot % 2 else 1
            if bar:
                if with_coeff:
                    s_first = -1 if da % 2 else 1
                    for z, c in loc.mul(a, bar[0]).items():
                        new = key[:k] + ((z, bar[1:]),) + key[k + 1:]
                        val = c if sign0 * s_first > 0 else f.neg(c)
                        out[new] = f.add(out.get(new, f.zero), val)
                for sign, c, w in loc.bar_middle(bar, da):
                    new = key[:k] + ((a, w),) + key[k + 1:]
                    val = c if sign0 * sign > 0 else f.neg(c)
                    out[new] = f.add(out.get(new, f.zero), val)
            prefix_tot += da + _bar_degree(loc, bar) + len(bar)
        return out

    return _assemble(field, s_max, n_max, blocks, diff)


def tor_dims_polyhedral(K, algebras, s_max, n_max, field: Field = QQ, variant: str = "aprime") -> TorTable:
    return polyhedral_bar(K, algebras, s_max, n_max, field, variant).homology_table()


# ---------------------------------------------------------------------------
# acyclicity of the full resolution over A^K
# ---------------------------------------------------------------------------


@dataclass
class AcyclicityReport:
    homology: dict  # (s, n) -> dim, nonzero entries only
    s_max: int
    n_max: int
    sizes: dict

    @property
    def ok(self) -> bool:
        return self.homology == {(0, 0): 1}


def full_resolution(K: FlagComplex, algebras, s_max: int, n_max: int, field: Field = QQ) -> BigradedChainComplex:
    """``A^K ⊗_τ (polyhedral bar complex)`` with the twisted differential.

    ``d(a ⊗ C) = (-1)^|a| a [d'(C) + d̄(C)]`` where ``d'`` moves the first
    entry ``a_i^1`` of each factor into the coefficient with sign
    ``(-1)^((sum_{j<i} tot c_j)(|a_i^1| + 1))`` and ``d̄`` is the tensor bar
    differential.
    """
    algs = _normalize_algebras(K, algebras)
    verts = K.vertices
    P = GraphProductAlgebra(K, algs, field)
    if n_max > P.N:
        raise TruncationError(f"n_max={n_max} exceeds truncation {P.N}")
    s_cap = s_max + 1
    locs = {v: _Local(algs[v], field, n_max, s_cap) for v in verts}
    comps = {v: _component_lists(locs[v], n_max, s_cap, False) for v in verts}
    bar_blocks = _polyhedral_blocks(K, verts, comps, n_max, s_cap)
    mons = {e: P.basis_monomials(e) for e in range(n_max + 1)}
    blocks: dict = {}
    for (s, nb), keys in bar_blocks.items():
        for e in range(0, n_max - nb + 1):
            blk = blocks.setdefault((s, nb + e), [])
            for mono in mons[e]:
                for key in keys:
                    blk.append((mono, tuple(w for _, w in key)))
    f = field

    def add_terms(out, sign, coeff, mono, bars):
        for w, c in P.normalize_terms(coeff if sign > 0 else f.neg(coeff), mono).items():
            new = (w, bars)
            out[new] = f.add(out.get(new, f.zero), c)

    def diff(key):
        mono, bars = key
        da = P.degree(mono)
        outer = -1 if da % 2 else 1
        out: dict = {}
        prefix_tot = 0
        for k, v in enumerate(verts):
            bar = bars[k]
            loc = locs[v]
            if bar:
                x = bar[0]
                n_i = prefix_tot * (loc.deg[x] + 1)
                sgn = outer * (-1 if n_i % 2 else 1)
                new_bars = bars[:k] + (bar[1:],) + bars[k + 1:]
                add_terms(out, sgn, f.one, mono + ((v, x),), new_bars)
                tensor_sign = -1 if prefix_tot % 2 else 1
                for sign, c, w in loc.bar_middle(bar, 0):
                    new_bars = bars[:k] + (w,) + bars[k + 1:]
                    s2 = outer * tensor_sign * sign
                    new = (mono, new_bars)
                    val = c if s2 > 0 else f.neg(c)
                    out[new] = f.add(out.get(new, f.zero), val)
            prefix_tot += _bar_degree(loc, bar) + len(bar)
        return out

    return _assemble(field, s_max, n_max, blocks, diff)


def check_acyclic_full(K: FlagComplex, algebras, s_max: int, n_max: int, field: Field = QQ) -> AcyclicityReport:
    cx = full_resolution(K, algebras, s_max, n_max, field)
    hom = {}
    for n in range(n_max + 1):
        for s in range(s_max + 1):
            h = cx.homology(s, n)
            if h:
                hom[(s, n)] = h
    return AcyclicityReport(hom, s_max, n_max, cx.sizes())
