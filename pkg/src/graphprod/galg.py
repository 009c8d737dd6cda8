"""Connected graded algebras with a chosen homogeneous basis, and their graph
products over a flag complex.

A monomial of the graph product is a tuple of letters ``(vertex, name)`` with
``name`` a positive-degree basis element of the algebra at ``vertex``.  Basis
monomials are reduced words in lexicographically least commutation order,
exactly as for groups; commuting letters pick up the Koszul sign
``(-1)**(|x||y|)`` when they pass each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping

from .complex import FlagComplex
from .errors import TruncationError, ValidationError
from .exactmath import QQ, Field, TruncatedSeries, RationalFunction, parse_rational

UNIT = "1"


class GradedAlgebraSpec:
    """Connected graded algebra known through degree ``N``.

    ``basis[d]`` lists the element names of degree ``d`` (``basis[0] == ["1"]``).
    ``products[(x, y)]`` maps a basis name ``z`` to its rational coefficient in
    ``x * y``; missing pairs multiply to zero.  Pairs involving the unit are
    implicit.
    """

    def __init__(
        self,
        name: str,
        N: int,
        basis: Mapping[int, Iterable[str]],
        products: Mapping[tuple, Mapping[str, object]],
        hilbert: RationalFunction | None = None,
        check: bool = True,
    ):
        self.name = name
        self.N = int(N)
        if self.N < 0:
            raise ValidationError("truncation degree must be non-negative")
        bas = {d: [str(x) for x in basis.get(d, ())] for d in range(self.N + 1)}
        if bas[0] not in ([UNIT], []):
            raise ValidationError("degree-0 basis must be exactly the unit")
        bas[0] = [UNIT]
        extra = [d for d in basis if not 0 <= int(d) <= self.N]
        if extra:
            raise ValidationError(f"basis degrees {extra} lie outside 0..{self.N}")
        self.basis = bas
        self.degree = {}
        for d, names in bas.items():
            for x in names:
                if x in self.degree:
                    raise ValidationError(f"basis name {x!r} repeated")
                self.degree[x] = d
        prods = {}
        for (x, y), terms in products.items():
            for u in (x, y):
                if u not in self.degree or u == UNIT:
                    raise ValidationError(f"product of unknown or unit element {u!r}")
            dx = self.degree[x] + self.degree[y]
            clean = {}
            for z, c in terms.items():
                c = parse_rational(c)
                if not c:
                    continue
                if z not in self.degree:
                    raise ValidationError(f"product lands on unknown element {z!r}")
                if self.degree[z] != dx:
                    raise ValidationError(f"{x}*{y} -> {z} breaks the grading")
                clean[z] = c
            if dx > self.N and clean:
                raise ValidationError(f"{x}*{y} lands beyond the truncation degree")
            if clean:
                prods[(x, y)] = clean
        self.products = prods
        self.hilbert = hilbert
        self._field_cache: dict = {}
        if check:
            self.check_associative()

    def __repr__(self):
        return f"GradedAlgebraSpec({self.name!r}, N={self.N})"

    @property
    def positive(self) -> list[str]:
        return [x for d in range(1, self.N + 1) for x in self.basis[d]]

    @property
    def dims(self) -> list[int]:
        return [len(self.basis[d]) for d in range(self.N + 1)]

    @property
    def d_min(self) -> int:
        for d in range(1, self.N + 1):
            if self.basis[d]:
                return d
        return self.N + 1

    def series(self, N: int | None = None) -> TruncatedSeries:
        """``P(A; t)`` through degree ``N`` (default the truncation degree)."""
        N = self.N if N is None else N
        if N > self.N:
            if self.hilbert is None:
                raise TruncationError(f"{self.name} known only through degree {self.N}")
            return self.hilbert.expand(N)
        return TruncatedSeries(self.dims[: N + 1], N)

    def augmentation_series(self, N: int | None = None) -> TruncatedSeries:
        """``P(J(A); t) = P(A; t) - 1``."""
        s = self.series(N)
        return TruncatedSeries([0] + list(s.coeffs[1:]), s.trunc_degree)

    def mul_q(self, x: str, y: str) -> dict:
        """Rational structure constants of ``x * y``; raises past truncation."""
        if x == UNIT:
            return {y: Fraction(1)}
        if y == UNIT:
            return {x: Fraction(1)}
        if self.degree[x] + self.degree[y] > self.N:
            raise TruncationError(f"{x}*{y} exceeds truncation degree {self.N} of {self.name}")
        return self.products.get((x, y), {})

    def structure(self, field: Field) -> dict:
        """Structure constants as raw values of ``field`` (cached)."""
        if field not in self._field_cache:
            out = {}
            for key, terms in self.products.items():
                try:
                    t = {z: field(c) for z, c in terms.items()}
                except ZeroDivisionError:
                    raise ValidationError(f"structure constants of {self.name} are not defined over {field!r}") from None
                t = {z: c for z, c in t.items() if c}
                if t:
                    out[key] = t
            self._field_cache[field] = out
        return self._field_cache[field]

    def mul(self, x: str, y: str, field: Field) -> dict:
        if x == UNIT:
            return {y: field.one}
        if y == UNIT:
            return {x: field.one}
        if self.degree[x] + self.degree[y] > self.N:
            raise TruncationError(f"{x}*{y} exceeds truncation degree {self.N} of {self.name}")
        return self.structure(field).get((x, y), {})

    def check_associative(self) -> None:
        pos = self.positive
        deg = self.degree
        for x, y, z in product(pos, repeat=3):
            if deg[x] + deg[y] + deg[z] > self.N:
                continue
            left: dict = {}
            for u, c in self.mul_q(x, y).items():
                for w, e in self.mul_q(u, z).items():
                    left[w] = left.get(w, 0) + c * e
            right: dict = {}
            for u, c in self.mul_q(y, z).items():
                for w, e in self.mul_q(x, u).items():
                    right[w] = right.get(w, 0) + c * e
            left = {k: v for k, v in left.items() if v}
            right = {k: v for k, v in right.items() if v}
            if left != right:
                raise ValidationError(f"{self.name} is not associative on ({x}, {y}, {z})")

    def describe(self) -> dict:
        return {
            "name": self.name,
            "trunc": self.N,
            "basis": {d: list(v) for d, v in self.basis.items() if d > 0 and v},
            "products": [
                [x, y, [[str(c), z] for z, c in sorted(t.items())]] for (x, y), t in sorted(self.products.items())
            ],
        }


def _power_name(k: int) -> str:
    return "x" if k == 1 else f"x^{k}"


def builtin_algebra(kind: str, *params, N: int = 8) -> GradedAlgebraSpec:
    """``exterior(d)``, ``trunc_poly(d, r)`` or ``free(d)`` through degree ``N``.

    All three are generated by one element ``x`` of degree ``d``; they differ
    in the relation ``x**2 = 0``, ``x**r = 0`` or none.
    """
    kind = kind.lower().replace("-", "_")
    if kind == "exterior":
        (d,) = params
        r = 2
    elif kind == "trunc_poly":
        d, r = params
    elif kind == "free":
        (d,) = params
        r = None
    else:
        raise ValidationError(f"unknown builtin algebra {kind!r}")
    if not isinstance(d, int) or d < 1:
        raise ValidationError("generator degree must be a positive integer")
    if r is not None and (not isinstance(r, int) or r < 2):
        raise ValidationError("truncation height must be an integer >= 2")
    if N < d:
        raise ValidationError("truncation degree must be at least the generator degree")
    top = N // d if r is None else min(r - 1, N // d)
    basis = {k * d: [_power_name(k)] for k in range(1, top + 1)}
    prods = {}
    for a in range(1, top + 1):
        for b in range(1, top + 1):
            if (a + b) * d <= N and (r is None or a + b < r):
                prods[(_power_name(a), _power_name(b))] = {_power_name(a + b): 1}
    one = (Fraction(1),)
    if r is None:
        hil = RationalFunction(one, (1,) + (0,) * (d - 1) + (-1,))
    else:
        hil = RationalFunction((1,) + (0,) * (d * r - 1) + (-1,), (1,) + (0,) * (d - 1) + (-1,))
    label = f"{kind}({', '.join(str(p) for p in params)})"
    return GradedAlgebraSpec(label, N, basis, prods, hilbert=hil, check=False)


def exterior(d: int = 1, N: int = 8) -> GradedAlgebraSpec:
    return builtin_algebra("exterior", d, N=N)


def trunc_poly(d: int = 1, r: int = 3, N: int = 8) -> GradedAlgebraSpec:
    return builtin_algebra("trunc_poly", d, r, N=N)


def free(d: int = 1, N: int = 8) -> GradedAlgebraSpec:
    return builtin_algebra("free", d, N=N)


# ---------------------------------------------------------------------------
# graph products
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignedMonomialSum:
    """Linear combination of basis monomials; ``terms`` maps monomial to raw
    nonzero field value."""

    terms: tuple  # sorted ((monomial, coeff), ...)
    ambient: "GraphProductAlgebra"

    @property
    def dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        return self.ambient.add(self, other)

    def __mul__(self, other):
        return self.ambient.multiply(self, other)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms:
            word = "*".join(f"{x}@{v}" for v, x in mono) or "1"
            parts.append(f"{c}*{word}")
        return " + ".join(parts)


class GraphProductAlgebra:
    """Graph product ``A^K`` of graded algebras over ``field``."""

    def __init__(self, K: FlagComplex, algebras, field: Field = QQ):
        if isinstance(algebras, GradedAlgebraSpec):
            algebras = {v: algebras for v in K.vertices}
        elif not isinstance(algebras, dict):
            algebras = list(algebras)
            if len(algebras) != K.m:
                raise ValidationError(f"need {K.m} algebras, got {len(algebras)}")
            algebras = dict(zip(K.vertices, algebras))
        if set(algebras) != set(K.vertices):
            raise ValidationError("algebras must be given for exactly the vertices of K")
        self.K = K
        self.algebras = algebras
        self.field = field
        vs = K.vertices
        self._commute = {(a, b): a != b and K.adjacent(a, b) for a in vs for b in vs}
        self._deg = {v: A.degree for v, A in algebras.items()}

    @property
    def N(self) -> int:
        return min(A.N for A in self.algebras.values())

    def __eq__(self, other):
        return (
            isinstance(other, GraphProductAlgebra)
            and self.K == other.K
            and self.field == other.field
            and all(self.algebras[v] is other.algebras[v] for v in self.K.vertices)
        )

    def __hash__(self):
        return hash((self.K, self.field))

    def degree(self, mono: tuple) -> int:
        deg = self._deg
        return sum(deg[v][x] for v, x in mono)

    def check_monomial(self, mono: Iterable) -> tuple:
        out = []
        for let in mono:
            try:
                v, x = let
            except (TypeError, ValueError):
                raise ValidationError(f"{let!r} is not a (vertex, basis element) pair") from None
            if v not in self.algebras:
                raise ValidationError(f"vertex {v!r} out of range")
            if x not in self.algebras[v].degree:
                raise ValidationError(f"{x!r} is not a basis element at vertex {v}")
            out.append((v, x))
        return tuple(out)

    # -- rewriting ------------------------------------------------------
    def _reduce(self, coeff, mono) -> dict:
        """Reduced monomials (not yet reordered) with coefficients."""
        f = self.field
        commute = self._commute
        deg = self._deg
        current = {(): coeff}
        for v, x in mono:
            if x == UNIT:
                continue
            dx = deg[v][x]
            A = self.algebras[v]
            nxt: dict = {}
            for word, c in current.items():
                j = len(word) - 1
                passed = 0
                while j >= 0:
                    u, y = word[j]
                    if u == v or not commute[(u, v)]:
                        break
                    passed += deg[u][y]
                    j -= 1
                if j >= 0 and word[j][0] == v:
                    sign = -1 if (dx * passed) % 2 else 1
                    for z, e in A.mul(word[j][1], x, f).items():
                        w2 = word[:j] + ((v, z),) + word[j + 1:]
                        val = f.mul(c, e) if sign > 0 else f.neg(f.mul(c, e))
                        nxt[w2] = f.add(nxt.get(w2, f.zero), val)
                else:
                    w2 = word + ((v, x),)
                    nxt[w2] = f.add(nxt.get(w2, f.zero), c)
            current = {w: c for w, c in nxt.items() if c}
        return current

    def _lex_order(self, word: tuple) -> tuple[int, tuple]:
        """(sign, reordered word) for the lexicographically least arrangement."""
        commute = self._commute
        deg = self._deg
        rest = list(word)
        out = []
        parity = 0
        while rest:
            best = None
            for k, (v, _) in enumerate(rest):
                if best is None or v < rest[best][0]:
                    if all(commute[(rest[j][0], v)] for j in range(k)):
                        best = k
            v, x = rest[best]
            if best:
                passed = sum(deg[u][y] for u, y in rest[:best])
                parity ^= (deg[v][x] * passed) & 1
            out.append(rest.pop(best))
        return (-1 if parity else 1), tuple(out)

    def normalize_terms(self, coeff, mono) -> dict:
        f = self.field
        out: dict = {}
        for word, c in self._reduce(coeff, mono).items():
            sign, w2 = self._lex_order(word)
            out[w2] = f.add(out.get(w2, f.zero), c if sign > 0 else f.neg(c))
        return {w: c for w, c in out.items() if c}

    def element(self, terms: dict) -> SignedMonomialSum:
        return SignedMonomialSum(tuple(sorted((w, c) for w, c in terms.items() if c)), self)

    def gp_normalize(self, coeff, mono: Iterable) -> SignedMonomialSum:
        mono = self.check_monomial(mono)
        return self.element(self.normalize_terms(self.field(coeff), mono))

    def monomial(self, *letters) -> SignedMonomialSum:
        return self.gp_normalize(1, letters)

    @property
    def one(self) -> SignedMonomialSum:
        return self.element({(): self.field.one})

    @property
    def zero(self) -> SignedMonomialSum:
        return self.element({})

    def add(self, a: SignedMonomialSum, b: SignedMonomialSum) -> SignedMonomialSum:
        f = self.field
        out = dict(a.terms)
        for w, c in b.terms:
            out[w] = f.add(out.get(w, f.zero), c)
        return self.element(out)

    def scale(self, a: SignedMonomialSum, c) -> SignedMonomialSum:
        c = self.field(c)
        return self.element({w: self.field.mul(c, x) for w, x in a.terms})

    def multiply(self, a: SignedMonomialSum, b: SignedMonomialSum) -> SignedMonomialSum:
        if a.ambient != self or b.ambient != self:
            raise ValidationError("operands belong to a different graph product")
        f = self.field
        out: dict = {}
        for wa, ca in a.terms:
            for wb, cb in b.terms:
                for w, c in self.normalize_terms(f.mul(ca, cb), wa + wb).items():
                    out[w] = f.add(out.get(w, f.zero), c)
        return self.element(out)

    def is_basis_monomial(self, mono: tuple) -> bool:
        terms = self.normalize_terms(self.field.one, mono)
        return list(terms.items()) == [(tuple(mono), self.field.one)]

    # -- counting -------------------------------------------------------
    def _support_ok(self, w: tuple, i: int) -> bool:
        commute = self._commute
        k = len(w) - 1
        while k >= 0 and commute[(w[k], i)]:
            if w[k] > i:
                return False
            k -= 1
        return k < 0 or w[k] != i

    def basis_counts(self, n: int) -> list[int]:
        """``dim (A^K)_d`` for ``d = 0..n`` from support words weighted by
        ``prod P(J(A_i))``."""
        if n > self.N:
            raise TruncationError(f"degree {n} beyond truncation {self.N}")
        J = {v: A.augmentation_series(n).coeffs for v, A in self.algebras.items()}
        totals = [0] * (n + 1)
        vs = self.K.vertices

        def walk(w, poly):
            for d in range(n + 1):
                totals[d] += poly[d]
            for i in vs:
                if not self._support_ok(w, i):
                    continue
                Ji = J[i]
                new = [0] * (n + 1)
                lo = next((d for d in range(n + 1) if poly[d]), None)
                if lo is None:
                    continue
                for a in range(lo, n + 1):
                    if poly[a]:
                        for b in range(1, n + 1 - a):
                            if Ji[b]:
                                new[a + b] += poly[a] * int(Ji[b])
                if any(new):
                    walk(w + (i,), new)

        walk((), [1] + [0] * n)
        return totals

    def gp_basis_count(self, n: int) -> int:
        return self.basis_counts(n)[n]

    def basis_monomials(self, n: int) -> list[tuple]:
        """All basis monomials of internal degree exactly ``n``, by extending
        shorter basis monomials one letter at a time."""
        if n > self.N:
            raise TruncationError(f"degree {n} beyond truncation {self.N}")
        out = []
        letters = [
            (v, x, self._deg[v][x]) for v in self.K.vertices for x in self.algebras[v].positive
        ]
        supp_ok = self._support_ok

        def walk(mono, supp, d):
            if d == n:
                out.append(mono)
                return
            for v, x, dx in letters:
                if d + dx <= n and supp_ok(supp, v):
                    walk(mono + ((v, x),), supp + (v,), d + dx)

        walk((), (), 0)
        return sorted(out)

    def hilbert_series(self, N: int | None = None) -> TruncatedSeries:
        N = self.N if N is None else N
        return TruncatedSeries(self.basis_counts(N), N)


# ---------------------------------------------------------------------------
# function-style API
# ---------------------------------------------------------------------------


def gp_normalize(coeff, mono, K: FlagComplex, algebras, field: Field = QQ) -> SignedMonomialSum:
    return GraphProductAlgebra(K, algebras, field).gp_normalize(coeff, mono)


def gp_basis_count(K: FlagComplex, algebras, n: int, field: Field = QQ) -> int:
    return GraphProductAlgebra(K, algebras, field).gp_basis_count(n)


def gp_multiply(a: SignedMonomialSum, b: SignedMonomialSum) -> SignedMonomialSum:
    return a.ambient.multiply(a, b)


def hilbert_series(obj, N: int | None = None) -> TruncatedSeries:
    """Hilbert series of a :class:`GradedAlgebraSpec` or :class:`GraphProductAlgebra`."""
    if isinstance(obj, GradedAlgebraSpec):
        return obj.series(N)
    return obj.hilbert_series(N)
