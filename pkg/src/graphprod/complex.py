"""Flag simplicial complexes given by a graph.

A :class:`FlagComplex` stores only its vertex labels and edges.  Simplices
are the cliques of the edge graph (the empty simplex and all singletons
included) and are enumerated on demand.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .errors import ValidationError

Simplex = tuple  # strictly increasing vertex labels


class FlagComplex:
    """Flag complex on the vertex labels ``vertices`` with the given edges.

    Labels are positive integers.  ``FlagComplex.from_edges(m, edges)`` builds
    the complex on ``1..m``; full subcomplexes keep the labels of the parent.
    """

    __slots__ = ("vertices", "edges", "_pos", "_adj")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Iterable[int]] = ()):
        verts = tuple(sorted(set(int(v) for v in vertices)))
        pos = {v: k for k, v in enumerate(verts)}
        es = set()
        for e in edges:
            e = tuple(e)
            if len(e) != 2:
                raise ValidationError(f"edge {e!r} does not have two endpoints")
            a, b = int(e[0]), int(e[1])
            if a == b:
                raise ValidationError(f"self-loop at vertex {a}")
            if a not in pos or b not in pos:
                raise ValidationError(f"edge {e!r} references an unknown vertex")
            es.add((min(a, b), max(a, b)))
        adj = [0] * len(verts)
        for a, b in es:
            adj[pos[a]] |= 1 << pos[b]
            adj[pos[b]] |= 1 << pos[a]
        self.vertices = verts
        self.edges = frozenset(es)
        self._pos = pos
        self._adj = tuple(adj)

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[Iterable[int]]) -> "FlagComplex":
        if m < 0:
            raise ValidationError("vertex count must be non-negative")
        for e in edges:
            for v in e:
                if not 1 <= int(v) <= m:
                    raise ValidationError(f"vertex {v} is outside 1..{m}")
        return cls(range(1, m + 1), edges)

    # -- basic queries --------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.vertices)

    def __eq__(self, other):
        return (
            isinstance(other, FlagComplex)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        es = ",".join(f"{a}{b}" if max(a, b) < 10 else f"{a}-{b}" for a, b in sorted(self.edges))
        return f"FlagComplex(vertices={list(self.vertices)}, edges={{{es}}})"

    def _check_vertex(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise ValidationError(f"{v} is not a vertex of {self!r}") from None

    def adjacent(self, a: int, b: int) -> bool:
        """True when ``{a, b}`` is an edge (commuting vertices)."""
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        bits = self._adj[self._check_vertex(v)]
        return tuple(u for k, u in enumerate(self.vertices) if bits >> k & 1)

    def is_simplex(self, sigma: Iterable[int]) -> bool:
        sigma = tuple(sigma)
        if any(v not in self._pos for v in sigma):
            return False
        return all(self.adjacent(a, b) for a, b in combinations(sigma, 2))

    def simplices(self) -> Iterator[Simplex]:
        """All simplices (cliques), depth first in increasing vertex order."""
        verts, adj = self.vertices, self._adj
        n = len(verts)

        def extend(simplex, allowed, start):
            yield simplex
            for k in range(start, n):
                if allowed >> k & 1:
                    yield from extend(simplex + (verts[k],), allowed & adj[k], k + 1)

        yield from extend((), (1 << n) - 1, 0)

    def num_simplices(self) -> int:
        return sum(1 for _ in self.simplices())

    def dimension(self) -> int:
        return max(len(s) for s in self.simplices()) - 1

    def simplices_of_dim(self, d: int) -> list[Simplex]:
        return sorted(s for s in self.simplices() if len(s) == d + 1)

    def maximal_is_full_simplex(self) -> bool:
        """True when the whole vertex set spans a simplex."""
        return self.is_simplex(self.vertices)

    # -- subcomplexes ---------------------------------------------------
    def full_subcomplex(self, I: Iterable[int]) -> "FlagComplex":
        I = set(I)
        for v in I:
            self._check_vertex(v)
        return FlagComplex(I, (e for e in self.edges if e[0] in I and e[1] in I))

    def components(self) -> list[tuple[int, ...]]:
        """Connected components of the 1-skeleton, ordered by smallest vertex."""
        seen: set[int] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.neighbors(u):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- chordality -----------------------------------------------------
    def lex_bfs(self) -> list[int]:
        """Lexicographic breadth-first search visiting order."""
        labels: dict[int, list[int]] = {v: [] for v in self.vertices}
        order: list[int] = []
        n = len(self.vertices)
        while len(order) < n:
            # largest label; ties by smallest vertex for determinism
            v = max((u for u in labels), key=lambda u: (labels[u], -u))
            order.append(v)
            del labels[v]
            for w in self.neighbors(v):
                if w in labels:
                    labels[w].append(n - len(order))
        return order

    def is_chordal(self) -> bool:
        """Every cycle of length >= 4 in the 1-skeleton has a chord.

        Reverse LexBFS order is a perfect elimination ordering exactly when
        the graph is chordal.
        """
        peo = list(reversed(self.lex_bfs()))
        where = {v: k for k, v in enumerate(peo)}
        for v in peo:
            later = [w for w in self.neighbors(v) if where[w] > where[v]]
            if not later:
                continue
            parent = min(later, key=where.__getitem__)
            pn = set(self.neighbors(parent))
            if any(w != parent and w not in pn for w in later):
                return False
        return True

    # -- orderings and splittings ---------------------------------------
    def lex_order_simplices(self) -> list[Simplex]:
        """Empty simplex first, then by cardinality, then lexicographically."""
        return sorted(self.simplices(), key=lambda s: (len(s), s))

    def split_star(self, v: int) -> tuple["FlagComplex", "FlagComplex", "FlagComplex"]:
        """(closed star of ``v``, simplices avoiding ``v``, their intersection).

        In a flag complex all three are full subcomplexes: on ``{v} ∪ N(v)``,
        on ``V \\ {v}`` and on ``N(v)`` respectively.
        """
        self._check_vertex(v)
        nbrs = set(self.neighbors(v))
        star = self.full_subcomplex(nbrs | {v})
        rest = self.full_subcomplex(set(self.vertices) - {v})
        link = self.full_subcomplex(nbrs)
        return star, rest, link


def flag_complete(m: int, edges: Iterable[Iterable[int]]) -> FlagComplex:
    """Flag complex on ``1..m`` filling every clique of ``edges``."""
    return FlagComplex.from_edges(m, list(edges))


def full_subcomplex(K: FlagComplex, I: Iterable[int]) -> FlagComplex:
    return K.full_subcomplex(I)


def components(K: FlagComplex) -> list[tuple[int, ...]]:
    return K.components()


def is_chordal(K: FlagComplex) -> bool:
    return K.is_chordal()


def lex_order_simplices(K: FlagComplex) -> list[Simplex]:
    return K.lex_order_simplices()


def split_star(K: FlagComplex, v: int):
    return K.split_star(v)


def vertex_subsets(K: FlagComplex, nonempty: bool = True) -> Iterator[tuple[int, ...]]:
    """All vertex subsets in increasing size, then lexicographic order."""
    verts = K.vertices
    for r in range(1 if nonempty else 0, len(verts) + 1):
        yield from combinations(verts, r)


# ---------------------------------------------------------------------------
# named complexes used throughout the tests and demos
# ---------------------------------------------------------------------------


def path(m: int) -> FlagComplex:
    return flag_complete(m, [(i, i + 1) for i in range(1, m)])


def cycle(m: int) -> FlagComplex:
    if m < 3:
        raise ValidationError("a cycle needs at least three vertices")
    return flag_complete(m, [(i, i % m + 1) for i in range(1, m + 1)])


def discrete(m: int) -> FlagComplex:
    return flag_complete(m, [])


def simplex(m: int) -> FlagComplex:
    return flag_complete(m, combinations(range(1, m + 1), 2))


def square() -> FlagComplex:
    return cycle(4)


def triangle_with_pendant() -> FlagComplex:
    """Filled triangle on 1,2,3 with vertex 4 attached to 3."""
    return flag_complete(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


def all_graphs(m: int) -> Iterator[FlagComplex]:
    """Every labeled flag complex on ``1..m`` (one per edge subset)."""
    pairs = list(combinations(range(1, m + 1), 2))
    for mask in range(1 << len(pairs)):
        yield flag_complete(m, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])
