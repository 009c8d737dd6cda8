"""Reduced simplicial homology of flag complexes over an exact field."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .complex import FlagComplex
from .errors import ChainComplexError
from .exactmath import Field, QQ
from .linalg import compose_is_zero, rank


@dataclass(frozen=True)
class AugmentedChainComplex:
    """Augmented simplicial chains; ``bases[d]`` lists the ``d``-simplices.

    ``boundary[d]`` is a list of sparse columns (one per ``d``-simplex) with
    row indices into ``bases[d-1]``.  Dimension ``-1`` holds only ``()``.
    """

    field: Field
    bases: dict
    boundary: dict

    @property
    def top(self) -> int:
        return max(self.bases)

    def check_d_squared(self) -> None:
        for d in range(1, self.top + 1):
            lower = self.boundary[d - 1]
            if not compose_is_zero(self.boundary[d], lambda j: lower[j], self.field):
                raise ChainComplexError(f"boundary squares to nonzero in dimension {d}")


def boundary_terms(sigma: tuple) -> list[tuple[int, tuple]]:
    """``[(sign, face)]`` with sign ``(-1)**#{j in sigma : j < i}`` for dropping ``i``."""
    return [(-1 if k % 2 else 1, sigma[:k] + sigma[k + 1:]) for k in range(len(sigma))]


def build_chain_complex(K: FlagComplex, field: Field = QQ) -> AugmentedChainComplex:
    by_dim: dict[int, list] = {-1: []}
    for s in K.simplices():
        by_dim.setdefault(len(s) - 1, []).append(s)
    bases = {d: sorted(v) for d, v in by_dim.items()}
    index = {d: {s: k for k, s in enumerate(b)} for d, b in bases.items()}
    boundary = {-1: [{} for _ in bases[-1]]}
    for d in range(0, max(bases) + 1):
        cols = []
        below = index[d - 1]
        for s in bases[d]:
            cols.append({below[f]: field(sign) for sign, f in boundary_terms(s)})
        boundary[d] = cols
    cx = AugmentedChainComplex(field, bases, boundary)
    cx.check_d_squared()
    return cx


@dataclass(frozen=True)
class HomologyProfile:
    """``dims[d] = dim H~_d`` for ``d >= 0``; the empty complex is flagged."""

    dims: dict
    field: Field
    empty: bool = False
    ranks: dict = dc_field(default_factory=dict, compare=False)

    def __getitem__(self, d: int) -> int:
        return self.dims.get(d, 0)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * b for d, b in self.dims.items()) - (1 if self.empty else 0)

    def is_acyclic(self) -> bool:
        return not self.empty and all(b == 0 for b in self.dims.values())


def reduced_homology(K: FlagComplex, field: Field = QQ) -> HomologyProfile:
    if K.m == 0:
        return HomologyProfile({}, field, empty=True)
    cx = build_chain_complex(K, field)
    top = cx.top
    ranks = {d: rank(cx.boundary[d], field) for d in range(0, top + 1)}
    ranks[top + 1] = 0
    dims = {}
    for d in range(0, top + 1):
        dims[d] = len(cx.bases[d]) - ranks[d] - ranks[d + 1]
    return HomologyProfile(dims, field, ranks=ranks)


def reduced_betti(K: FlagComplex, d: int, field: Field = QQ) -> int:
    """``dim H~_d(K)``, taking a cheap shortcut in degree 0."""
    if K.m == 0:
        return 1 if d == -1 else 0
    if d == -1:
        return 0
    if d == 0:
        return len(K.components()) - 1
    return reduced_homology(K, field)[d]
