"""Exact scalars (prime fields and rationals), truncated power series and
rational functions.

Nothing in this module touches floating point.  Field elements used in bulk
(inside elimination loops) are plain Python values -- ``int`` residues for
GF(p) and :class:`fractions.Fraction` for the rationals -- and the
:class:`Field` object supplies the operations.  :class:`FieldElem` wraps a
value together with its field for the user-facing API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Field",
    "FieldElem",
    "FieldMismatchError",
    "GF",
    "QQ",
    "RationalFunction",
    "TruncatedSeries",
    "expand_rational",
    "field_arith",
    "parse_field",
    "parse_rational",
    "series_invert",
    "series_mul",
]

MAX_PRIME = 2**31


class FieldMismatchError(ValueError):
    """Operands come from different fields."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def parse_rational(x) -> Fraction:
    """Integers, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


class Field:
    """GF(p) for a prime ``p < 2**31``, or the rationals when ``p`` is None."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if not isinstance(p, int) or not _is_prime(p) or p >= MAX_PRIME:
                raise ValueError(f"unsupported field characteristic {p!r}")
        self.p = p

    # -- identity -------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def name(self) -> str:
        return "q" if self.p is None else f"gf{self.p}"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def is_rational(self) -> bool:
        return self.p is None

    # -- raw values -----------------------------------------------------
    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def __call__(self, x):
        """Coerce an integer, Fraction or ``"p/q"`` string into a raw value."""
        q = parse_rational(x)
        if self.p is None:
            return q
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator of {q} vanishes in {self!r}")
        return (q.numerator * pow(q.denominator, -1, self.p)) % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.p is None:
            return 1 / a
        return pow(a, -1, self.p)

    def elem(self, x) -> "FieldElem":
        return FieldElem(self, self(x))

    def elements(self):
        """All elements of a prime field (finite fields only)."""
        if self.p is None:
            raise ValueError("the rationals are infinite")
        return [FieldElem(self, v) for v in range(self.p)]


GF = Field
QQ = Field(None)


def parse_field(name: str | int | None) -> Field:
    """``"gf2"``, ``"gf3"``, ``"q"``/``"qq"``/``"rational"`` (or an int prime)."""
    if name is None:
        return QQ
    if isinstance(name, int):
        return Field(name)
    s = str(name).strip().lower()
    if s in ("q", "qq", "rational", "rationals"):
        return QQ
    if s.startswith("gf"):
        s = s[2:].strip("()")
    try:
        return Field(int(s))
    except ValueError:
        raise ValueError(f"unknown field {name!r}") from None


@dataclass(frozen=True)
class FieldElem:
    field: Field
    value: object

    def __post_init__(self):
        f = self.field
        v = self.value
        if f.p is not None:
            if not isinstance(v, int) or not 0 <= v < f.p:
                raise ValueError(f"{v!r} is not a canonical residue mod {f.p}")
        elif not isinstance(v, Fraction):
            object.__setattr__(self, "value", Fraction(v))

    def _check(self, other) -> "FieldElem":
        if not isinstance(other, FieldElem):
            return FieldElem(self.field, self.field(other))
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return FieldElem(self.field, self.field.add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        return FieldElem(self.field, self.field.sub(self.value, o.value))

    def __mul__(self, other):
        o = self._check(other)
        return FieldElem(self.field, self.field.mul(self.value, o.value))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}" if self.field.p is None else f"{self.value} (mod {self.field.p})"


def field_arith(a: FieldElem, b: FieldElem | None, op: str) -> FieldElem:
    """Apply ``op`` in ``{"add", "mul", "inv", "neg"}``; unary ops ignore ``b``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise ValueError(f"unknown field operation {op!r}")


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Power series with rational coefficients known through degree ``N``.

    ``coeffs[n]`` is the coefficient of ``t**n`` for ``0 <= n <= N``.  Every
    operation truncates at the smallest truncation degree involved, and never
    reports a coefficient beyond it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, trunc_degree: int | None = None):
        cs = [parse_rational(c) for c in coeffs]
        if trunc_degree is None:
            trunc_degree = len(cs) - 1
        if trunc_degree < 0:
            raise ValueError("truncation degree must be non-negative")
        cs = cs[: trunc_degree + 1]
        cs += [Fraction(0)] * (trunc_degree + 1 - len(cs))
        self.coeffs = tuple(cs)

    @property
    def trunc_degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls([1], N)

    @classmethod
    def monomial(cls, k: int, N: int, c=1) -> "TruncatedSeries":
        cs = [0] * (N + 1)
        if k <= N:
            cs[k] = c
        return cls(cs, N)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.trunc_degree:
            raise IndexError(f"coefficient {n} is beyond truncation degree {self.trunc_degree}")
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, N={self.trunc_degree})"

    def truncate(self, N: int) -> "TruncatedSeries":
        if N > self.trunc_degree:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: N + 1], N)

    def __add__(self, other):
        N = min(self.trunc_degree, other.trunc_degree)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(N + 1)], N)

    def __sub__(self, other):
        N = min(self.trunc_degree, other.trunc_degree)
        return TruncatedSeries([self.coeffs[i] - other.coeffs[i] for i in range(N + 1)], N)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.trunc_degree)

    def scale(self, c) -> "TruncatedSeries":
        c = parse_rational(c)
        return TruncatedSeries([c * x for x in self.coeffs], self.trunc_degree)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        return series_invert(self)

    def as_ints(self) -> list[int]:
        """Coefficients as ints; raises if any is not integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(int(c))
        return out


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at ``min(a.N, b.N)``."""
    N = min(a.trunc_degree, b.trunc_degree)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * (N + 1)
    for i in range(N + 1):
        ai = ac[i]
        if ai:
            for j in range(N + 1 - i):
                if bc[j]:
                    out[i + j] += ai * bc[j]
    return TruncatedSeries(out, N)


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse to the same truncation degree."""
    c = s.coeffs
    if c[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    N = s.trunc_degree
    inv0 = 1 / c[0]
    out = [inv0]
    for n in range(1, N + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if c[k]:
                acc += c[k] * out[n - k]
        out.append(-acc * inv0)
    return TruncatedSeries(out, N)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


def _strip(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else (Fraction(0),)


@dataclass(frozen=True)
class RationalFunction:
    """``numerator / denominator`` with coefficient lists in ascending degree."""

    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        num = _strip(parse_rational(c) for c in self.numerator)
        den = _strip(parse_rational(c) for c in self.denominator)
        if den[0] == 0:
            raise ZeroDivisionError("denominator vanishes at t = 0")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def expand(self, N: int) -> TruncatedSeries:
        return expand_rational(self, N)


def expand_rational(r: RationalFunction, N: int) -> TruncatedSeries:
    """Power-series expansion at 0 through degree ``N`` by long division."""
    num, den = r.numerator, r.denominator
    d0 = den[0]
    if d0 == 0:
        raise ZeroDivisionError("denominator vanishes at t = 0")
    out: list[Fraction] = []
    for n in range(N + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / d0)
    return TruncatedSeries(out, N)
