"""Graph products of discrete groups over a flag complex.

Elements are stored as normal-form words: tuples of letters ``(vertex, elem)``
with ``elem`` a non-identity element of the local group at ``vertex``.  The
normal form is the reduced word whose vertex sequence is lexicographically
least among all words obtained from it by swapping adjacent commuting letters.
Such a word is in particular locally minimal: no single commuting swap makes
it smaller.

Normalization runs in two passes.  The first pass multiplies letters in one at
a time, merging each new letter into an earlier letter of the same vertex when
only commuting letters sit between them; this keeps the word reduced.  The
second pass reorders the reduced word greedily: it always emits the smallest
vertex among the letters that commute with everything still ahead of them.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .complex import FlagComplex
from .errors import ValidationError

Letter = tuple  # (vertex, elem)


# ---------------------------------------------------------------------------
# local groups
# ---------------------------------------------------------------------------


class LocalGroup:
    """A vertex group: a finite multiplication table, Z/n, or Z.

    Elements are ints.  For a table group they are indices into ``names``;
    for Z/n they are residues; for Z they are the integers themselves.  The
    identity is ``self.identity``.
    """

    __slots__ = ("kind", "n", "names", "table", "inverses", "identity", "_name_index")

    def __init__(self, kind, n=None, names=None, table=None, identity=0):
        self.kind = kind
        self.n = n
        self.names = names
        self.table = table
        self.identity = identity
        self.inverses = None
        self._name_index = None
        if kind == "table":
            self._name_index = {nm: k for k, nm in enumerate(names)}
            self.inverses = tuple(
                next(b for b in range(n) if table[a][b] == identity) for a in range(n)
            )

    # -- constructors ---------------------------------------------------
    @classmethod
    def cyclic(cls, n: int) -> "LocalGroup":
        if not isinstance(n, int) or n < 2:
            raise ValidationError(f"cyclic group order must be an integer >= 2, got {n!r}")
        return cls("cyclic", n=n)

    @classmethod
    def integers(cls) -> "LocalGroup":
        return cls("integers")

    @classmethod
    def from_table(cls, names: Sequence[str], table: Sequence[Sequence], identity=None) -> "LocalGroup":
        """Finite group from element names and a multiplication table.

        Table entries may be indices or names.  Group axioms are checked.
        """
        names = tuple(str(x) for x in names)
        n = len(names)
        if n == 0 or len(set(names)) != n:
            raise ValidationError("group element names must be nonempty and distinct")
        index = {nm: k for k, nm in enumerate(names)}

        def idx(x):
            if isinstance(x, bool):
                raise ValidationError("booleans are not group elements")
            if isinstance(x, int):
                if not 0 <= x < n:
                    raise ValidationError(f"table entry {x} out of range")
                return x
            if str(x) not in index:
                raise ValidationError(f"unknown element {x!r} in table")
            return index[str(x)]

        if len(table) != n or any(len(row) != n for row in table):
            raise ValidationError("multiplication table must be square of size |G|")
        tab = tuple(tuple(idx(x) for x in row) for row in table)
        if identity is None:
            cands = [e for e in range(n) if all(tab[e][a] == a == tab[a][e] for a in range(n))]
            if not cands:
                raise ValidationError("multiplication table has no identity")
            e = cands[0]
        else:
            e = idx(identity)
            if any(tab[e][a] != a or tab[a][e] != a for a in range(n)):
                raise ValidationError(f"{names[e]!r} is not a two-sided identity")
        for a in range(n):
            if not any(tab[a][b] == e and tab[b][a] == e for b in range(n)):
                raise ValidationError(f"{names[a]!r} has no inverse")
        for a, b, c in product(range(n), repeat=3):
            if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
                raise ValidationError("multiplication table is not associative")
        return cls("table", n=n, names=names, table=tab, identity=e)

    # -- arithmetic -----------------------------------------------------
    @property
    def is_finite(self) -> bool:
        return self.kind != "integers"

    @property
    def order(self) -> int | None:
        return self.n if self.is_finite else None

    def mul(self, a, b):
        if self.kind == "table":
            return self.table[a][b]
        if self.kind == "cyclic":
            return (a + b) % self.n
        return a + b

    def inv(self, a):
        if self.kind == "table":
            return self.inverses[a]
        if self.kind == "cyclic":
            return (-a) % self.n
        return -a

    def is_element(self, a) -> bool:
        if isinstance(a, bool) or not isinstance(a, int):
            return False
        return self.kind == "integers" or 0 <= a < self.n

    def nonidentity(self) -> list:
        """Non-identity elements in load order (finite groups only)."""
        if not self.is_finite:
            raise ValueError("Z has infinitely many elements")
        return [a for a in range(self.n) if a != self.identity]

    # -- names ----------------------------------------------------------
    def name(self, a) -> str:
        return self.names[a] if self.kind == "table" else str(a)

    def parse(self, x):
        """Element from its name (or an int for Z/n and Z)."""
        if self.kind == "table":
            if isinstance(x, str) and x in self._name_index:
                return self._name_index[x]
            raise ValidationError(f"{x!r} is not an element of this group")
        if isinstance(x, bool):
            raise ValidationError("booleans are not group elements")
        try:
            a = int(x)
        except (TypeError, ValueError):
            raise ValidationError(f"{x!r} is not an integer group element") from None
        if self.kind == "cyclic":
            if not 0 <= a < self.n:
                raise ValidationError(f"{a} is not a residue mod {self.n}")
        return a

    def describe(self) -> dict:
        if self.kind == "cyclic":
            return {"kind": "cyclic", "order": self.n}
        if self.kind == "integers":
            return {"kind": "integers"}
        return {
            "kind": "table",
            "elements": list(self.names),
            "identity": self.names[self.identity],
            "table": [[self.names[c] for c in row] for row in self.table],
        }

    def __eq__(self, other):
        return isinstance(other, LocalGroup) and (self.kind, self.n, self.table, self.identity) == (
            other.kind,
            other.n,
            other.table,
            other.identity,
        )

    def __hash__(self):
        return hash((self.kind, self.n, self.table, self.identity))

    def __repr__(self):
        if self.kind == "cyclic":
            return f"Z/{self.n}"
        if self.kind == "integers":
            return "Z"
        return f"TableGroup({list(self.names)})"


Z2 = LocalGroup.cyclic(2)


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalFormWord:
    letters: tuple
    ambient: "GraphProduct"

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def support(self) -> tuple:
        return tuple(v for v, _ in self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other):
        return self.ambient.multiply(self, other)

    def __repr__(self):
        if not self.letters:
            return "1"
        G = self.ambient.groups
        return "*".join(f"{G[v].name(g)}@{v}" for v, g in self.letters)


@dataclass(frozen=True)
class SplitForm:
    h: NormalFormWord
    gammas: tuple


class GraphProduct:
    """The graph product of ``groups`` (one per vertex) over the flag complex ``K``."""

    def __init__(self, K: FlagComplex, groups):
        if isinstance(groups, LocalGroup):
            groups = {v: groups for v in K.vertices}
        elif not isinstance(groups, dict):
            groups = list(groups)
            if len(groups) != K.m:
                raise ValidationError(f"need {K.m} local groups, got {len(groups)}")
            groups = dict(zip(K.vertices, groups))
        if set(groups) != set(K.vertices):
            raise ValidationError("local groups must be given for exactly the vertices of K")
        self.K = K
        self.groups = groups
        vs = K.vertices
        self._commute = {(a, b): K.adjacent(a, b) for a in vs for b in vs if a != b}
        for a in vs:
            self._commute[(a, a)] = False

    def __eq__(self, other):
        return isinstance(other, GraphProduct) and self.K == other.K and self.groups == other.groups

    def __hash__(self):
        return hash((self.K, tuple(sorted(self.groups.items()))))

    def __repr__(self):
        return f"GraphProduct({self.K!r}, {[self.groups[v] for v in self.K.vertices]})"

    @property
    def is_finite_type(self) -> bool:
        return all(G.is_finite for G in self.groups.values())

    # -- validation -----------------------------------------------------
    def check_letters(self, letters: Iterable) -> tuple:
        out = []
        for let in letters:
            try:
                v, g = let
            except (TypeError, ValueError):
                raise ValidationError(f"{let!r} is not a (vertex, element) pair") from None
            if v not in self.groups:
                raise ValidationError(f"vertex {v!r} out of range")
            if not self.groups[v].is_element(g):
                raise ValidationError(f"{g!r} is not an element of the group at vertex {v}")
            out.append((v, g))
        return tuple(out)

    # -- normal forms ---------------------------------------------------
    def reduce(self, letters: Sequence) -> list:
        """Reduced word for ``letters`` (same element, no merges available)."""
        commute = self._commute
        groups = self.groups
        out: list = []
        for v, g in letters:
            G = groups[v]
            if g == G.identity:
                continue
            j = len(out) - 1
            while j >= 0:
                u = out[j][0]
                if u == v:
                    h = G.mul(out[j][1], g)
                    if h == G.identity:
                        del out[j]
                    else:
                        out[j] = (v, h)
                    break
                if not commute[(u, v)]:
                    j = -1
                    break
                j -= 1
            if j < 0:
                out.append((v, g))
        return out

    def lex_order(self, letters: Sequence) -> tuple:
        """Lexicographically least rearrangement by commuting swaps."""
        commute = self._commute
        rest = list(letters)
        out = []
        while rest:
            best = None
            for k, (v, _) in enumerate(rest):
                if best is None or v < rest[best][0]:
                    if all(commute[(rest[j][0], v)] for j in range(k)):
                        best = k
            out.append(rest.pop(best))
        return tuple(out)

    def normal_letters(self, letters: Sequence) -> tuple:
        return self.lex_order(self.reduce(letters))

    def normalize(self, letters: Iterable) -> NormalFormWord:
        return NormalFormWord(self.normal_letters(self.check_letters(letters)), self)

    def word(self, *letters) -> NormalFormWord:
        return self.normalize(letters)

    def letter(self, v: int, g) -> NormalFormWord:
        return self.normalize([(v, g)])

    @property
    def identity(self) -> NormalFormWord:
        return NormalFormWord((), self)

    def is_normal(self, letters: Sequence) -> bool:
        return tuple(letters) == self.normal_letters(letters)

    def is_locally_minimal(self, letters: Sequence) -> bool:
        """Distinct adjacent vertices and no decreasing commuting adjacent pair."""
        for (u, _), (v, _) in zip(letters, letters[1:]):
            if u == v or (self._commute[(u, v)] and v < u):
                return False
        return True

    # -- group operations -----------------------------------------------
    def _same(self, a: NormalFormWord, b: NormalFormWord):
        if a.ambient is not self and a.ambient != self:
            raise ValidationError("word belongs to a different graph product")
        if b.ambient is not self and b.ambient != self:
            raise ValidationError("word belongs to a different graph product")

    def multiply(self, a: NormalFormWord, b: NormalFormWord) -> NormalFormWord:
        self._same(a, b)
        return NormalFormWord(self.normal_letters(a.letters + b.letters), self)

    def invert(self, a: NormalFormWord) -> NormalFormWord:
        G = self.groups
        rev = [(v, G[v].inv(g)) for v, g in reversed(a.letters)]
        return NormalFormWord(self.normal_letters(rev), self)

    def power(self, a: NormalFormWord, k: int) -> NormalFormWord:
        if k < 0:
            a, k = self.invert(a), -k
        out = self.identity
        for _ in range(k):
            out = self.multiply(out, a)
        return out

    def commutator(self, g: NormalFormWord, h: NormalFormWord) -> NormalFormWord:
        """``L_g(h) = g^-1 h^-1 g h``."""
        letters = self.invert(g).letters + self.invert(h).letters + g.letters + h.letters
        return NormalFormWord(self.normal_letters(letters), self)

    def project(self, a: NormalFormWord, i: int):
        if i not in self.groups:
            raise ValidationError(f"vertex {i!r} out of range")
        G = self.groups[i]
        x = G.identity
        for v, g in a.letters:
            if v == i:
                x = G.mul(x, g)
        return x

    def ab(self, a: NormalFormWord) -> tuple:
        return tuple(self.project(a, i) for i in self.K.vertices)

    def in_kernel(self, a: NormalFormWord) -> bool:
        return all(x == self.groups[i].identity for i, x in zip(self.K.vertices, self.ab(a)))

    def split(self, g: NormalFormWord) -> SplitForm:
        """``g = h * gamma_m ... gamma_1`` with ``h`` in the kernel of ``ab``."""
        gammas = self.ab(g)
        G = self.groups
        tail = [(i, G[i].inv(x)) for i, x in zip(self.K.vertices, gammas)]
        h = NormalFormWord(self.normal_letters(g.letters + tuple(tail)), self)
        return SplitForm(h, gammas)

    def unsplit(self, s: SplitForm) -> NormalFormWord:
        tail = [(i, x) for i, x in reversed(list(zip(self.K.vertices, s.gammas)))]
        return NormalFormWord(self.normal_letters(s.h.letters + tuple(tail)), self)

    # -- kernel generators ----------------------------------------------
    def kernel_generator_terms(self, gen_subsets=None) -> list[dict]:
        """Iterated commutators generating ``ker(ab)``, with their provenance.

        For every vertex subset ``I`` (increasing ``i_1 < ... < i_n``) whose
        full subcomplex is disconnected, and every ``t`` that is the minimum of
        a component of ``K_I`` avoiding ``i_n``, emit
        ``L_{g_1} o ... (skip t) ... o L_{g_n}(g_t)`` with each ``g_l`` running
        over ``gen_subsets[i_l]``.
        """
        subsets = {}
        for v, G in self.groups.items():
            if gen_subsets is not None and v in gen_subsets:
                sub = [G.parse(x) if isinstance(x, str) else x for x in gen_subsets[v]]
                if any(not G.is_element(x) or x == G.identity for x in sub):
                    raise ValidationError(f"generating subset at vertex {v} must be non-identity elements")
                subsets[v] = list(sub)
            elif G.is_finite:
                subsets[v] = G.nonidentity()
            else:
                subsets[v] = None
        out = []
        K = self.K
        for r in range(2, K.m + 1):
            for I in combinations(K.vertices, r):
                comps = K.full_subcomplex(I).components()
                if len(comps) < 2:
                    continue
                top = I[-1]
                for comp in comps:
                    if top in comp:
                        continue
                    t = comp[0]
                    for v in I:
                        if not subsets[v]:
                            raise ValidationError(f"empty generating subset at vertex {v}")
                    others = [v for v in I if v != t]
                    for gt in subsets[t]:
                        for choice in product(*(subsets[v] for v in others)):
                            w = self.letter(t, gt)
                            for v, g in reversed(list(zip(others, choice))):
                                w = self.commutator(self.letter(v, g), w)
                            out.append({"subset": I, "t": t, "word": w})
        return out

    def kernel_generators(self, gen_subsets=None) -> list[NormalFormWord]:
        return [e["word"] for e in self.kernel_generator_terms(gen_subsets)]

    # -- enumeration ----------------------------------------------------
    def generators(self) -> list[NormalFormWord]:
        """All single-letter elements (finite local groups only)."""
        return [self.letter(v, g) for v in self.K.vertices for g in self.groups[v].nonidentity()]

    def spheres(self, n_max: int) -> list[set]:
        """Normal forms of length exactly ``n`` for ``n = 0..n_max``."""
        if not self.is_finite_type:
            raise ValidationError("enumeration needs finite local groups")
        alphabet = [(v, g) for v in self.K.vertices for g in self.groups[v].nonidentity()]
        spheres = [{()}]
        for n in range(1, n_max + 1):
            nxt = set()
            for w in spheres[-1]:
                for x in alphabet:
                    y = self.normal_letters(w + (x,))
                    if len(y) == n:
                        nxt.add(y)
            spheres.append(nxt)
        return spheres

    def ball(self, radius: int) -> list[NormalFormWord]:
        out = []
        for sph in self.spheres(radius):
            out.extend(NormalFormWord(w, self) for w in sorted(sph))
        return out

    def support_words(self, n_max: int) -> list[list[tuple]]:
        """Reduced, lexicographically normal vertex sequences of each length.

        Appending ``i`` to such a word keeps it so exactly when every letter
        in the longest suffix commuting with ``i`` is smaller than ``i`` and the
        letter just before that suffix is not ``i``.
        """
        commute = self._commute
        vs = self.K.vertices
        levels = [[()]]
        for _ in range(n_max):
            nxt = []
            for w in levels[-1]:
                for i in vs:
                    k = len(w) - 1
                    ok = True
                    while k >= 0 and commute[(w[k], i)]:
                        if w[k] > i:
                            ok = False
                            break
                        k -= 1
                    if ok and (k < 0 or w[k] != i):
                        nxt.append(w + (i,))
            levels.append(nxt)
        return levels

    def length_census(self, n_max: int) -> dict:
        """Elements of each length, enumerated and predicted from support words."""
        if not self.is_finite_type:
            raise ValidationError("length census needs finite local groups")
        counted = [len(s) for s in self.spheres(n_max)]
        predicted = []
        for level in self.support_words(n_max):
            tot = 0
            for w in level:
                c = 1
                for v in w:
                    c *= self.groups[v].order - 1
                tot += c
            predicted.append(tot)
        return {"counts": counted, "predicted": predicted}

    def random_word(self, length: int, rng: random.Random) -> tuple:
        vs = self.K.vertices
        out = []
        for _ in range(length):
            v = rng.choice(vs)
            G = self.groups[v]
            g = rng.choice(G.nonidentity()) if G.is_finite else rng.choice([-2, -1, 1, 2])
            out.append((v, g))
        return tuple(out)

    # -- brute-force equality -------------------------------------------
    def rewrite_neighbors(self, w: tuple, bound: int, enum: dict) -> Iterable[tuple]:
        """Words one swap, merge, split or identity-pair insertion away from ``w``."""
        commute = self._commute
        G = self.groups
        n = len(w)
        for k in range(n - 1):
            (u, a), (v, b) = w[k], w[k + 1]
            if u == v:
                h = G[u].mul(a, b)
                mid = () if h == G[u].identity else ((u, h),)
                yield w[:k] + mid + w[k + 2:]
            elif commute[(u, v)]:
                yield w[:k] + (w[k + 1], w[k]) + w[k + 2:]
        if n + 1 <= bound:
            for k, (u, a) in enumerate(w):
                for x in enum[u]:
                    y = G[u].mul(G[u].inv(x), a)
                    if y != G[u].identity:
                        yield w[:k] + ((u, x), (u, y)) + w[k + 1:]
        if n + 2 <= bound:
            for k in range(n + 1):
                for u in self.K.vertices:
                    for x in enum[u]:
                        yield w[:k] + ((u, x), (u, G[u].inv(x))) + w[k:]

    def equal_oracle(self, u: Iterable, v: Iterable, bound: int | None = None, max_bound: int = 8) -> bool:
        """Whether ``v`` is reachable from ``u`` by rewriting moves in both directions.

        Words never exceed ``bound`` letters (default: the longer input).
        Splits and insertions draw from each vertex's finite element list; for
        Z the range is limited by the largest exponent in the inputs.
        """
        u = tuple(x for x in self.check_letters(u) if x[1] != self.groups[x[0]].identity)
        v = tuple(x for x in self.check_letters(v) if x[1] != self.groups[x[0]].identity)
        if bound is None:
            bound = max(len(u), len(v))
        if bound > max_bound:
            raise ValidationError(f"oracle word bound {bound} exceeds {max_bound}")
        big = max([abs(g) for _, g in u + v] + [1])
        enum = {}
        for w, G in self.groups.items():
            enum[w] = G.nonidentity() if G.is_finite else [x for x in range(-big, big + 1) if x]
        seen = {u}
        queue = deque([u])
        while queue:
            w = queue.popleft()
            if w == v:
                return True
            for y in self.rewrite_neighbors(w, bound, enum):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return False


# ---------------------------------------------------------------------------
# bulk certification of the word problem
# ---------------------------------------------------------------------------


class WordSpace:
    """All words of length at most ``L`` over finite vertex groups, with the
    rewriting moves that do not depend on the commutation graph.

    Used to compute rewrite classes of every word at once for many graphs on
    the same vertex set: a swap edge is kept when its two vertices commute.
    """

    def __init__(self, groups: dict, L: int):
        self.groups = groups
        self.L = L
        alphabet = [(v, g) for v in sorted(groups) for g in groups[v].nonidentity()]
        words = [()]
        for n in range(1, L + 1):
            words.extend(product(alphabet, repeat=n))
        self.words = words
        index = {w: k for k, w in enumerate(words)}
        merge_src, merge_dst = [], []
        swap_src, swap_dst, swap_u, swap_v = [], [], [], []
        for k, w in enumerate(words):
            for p in range(len(w) - 1):
                (u, a), (v, b) = w[p], w[p + 1]
                if u == v:
                    G = groups[u]
                    h = G.mul(a, b)
                    mid = () if h == G.identity else ((u, h),)
                    merge_src.append(k)
                    merge_dst.append(index[w[:p] + mid + w[p + 2:]])
                else:
                    y = w[:p] + (w[p + 1], w[p]) + w[p + 2:]
                    j = index[y]
                    if j > k:  # each undirected swap once
                        swap_src.append(k)
                        swap_dst.append(j)
                        swap_u.append(u)
                        swap_v.append(v)
        self.merge = (np.array(merge_src, dtype=np.int64), np.array(merge_dst, dtype=np.int64))
        self.swap = (
            np.array(swap_src, dtype=np.int64),
            np.array(swap_dst, dtype=np.int64),
            np.array(swap_u, dtype=np.int64),
            np.array(swap_v, dtype=np.int64),
        )

    def classes(self, K: FlagComplex) -> np.ndarray:
        """Rewrite-class label of every word for the commutation graph of ``K``."""
        m = max(K.vertices) + 1
        adj = np.zeros((m, m), dtype=bool)
        for a, b in K.edges:
            adj[a, b] = adj[b, a] = True
        s, d, u, v = self.swap
        keep = adj[u, v]
        src = np.concatenate([self.merge[0], s[keep]])
        dst = np.concatenate([self.merge[1], d[keep]])
        n = len(self.words)
        g = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n)).tocsr()
        _, labels = connected_components(g, directed=False)
        return labels


def certify_word_problem(P: GraphProduct, space: WordSpace) -> dict:
    """Compare normal forms with rewrite classes on every word of ``space``.

    Normal forms must be constant on each class and distinct across classes.
    """
    labels = space.classes(P.K)
    nf_of_class: dict = {}
    class_of_nf: dict = {}
    bad = 0
    nf = P.normal_letters
    for w, c in zip(space.words, labels.tolist()):
        y = nf(w)
        if nf_of_class.setdefault(c, y) != y or class_of_nf.setdefault(y, c) != c:
            bad += 1
    return {"words": len(space.words), "classes": len(nf_of_class), "mismatches": bad}


# ---------------------------------------------------------------------------
# function-style API
# ---------------------------------------------------------------------------


def normalize(word: Iterable, K: FlagComplex, groups) -> NormalFormWord:
    return GraphProduct(K, groups).normalize(word)


def multiply(a: NormalFormWord, b: NormalFormWord) -> NormalFormWord:
    return a.ambient.multiply(a, b)


def invert(a: NormalFormWord) -> NormalFormWord:
    return a.ambient.invert(a)


def project(a: NormalFormWord, i: int):
    return a.ambient.project(a, i)


def ab(a: NormalFormWord) -> tuple:
    return a.ambient.ab(a)


def split(g: NormalFormWord) -> SplitForm:
    return g.ambient.split(g)


def kernel_generators(K: FlagComplex, groups, gen_subsets=None) -> list[NormalFormWord]:
    return GraphProduct(K, groups).kernel_generators(gen_subsets)


def equal_oracle(u: Iterable, v: Iterable, K: FlagComplex, groups, bound=None) -> bool:
    return GraphProduct(K, groups).equal_oracle(u, v, bound)


def length_census(K: FlagComplex, groups, n_max: int) -> dict:
    return GraphProduct(K, groups).length_census(n_max)
