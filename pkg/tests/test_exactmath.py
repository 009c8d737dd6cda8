from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphprod.exactmath import (
    GF,
    QQ,
    FieldMismatchError,
    RationalFunction,
    TruncatedSeries,
    expand_rational,
    parse_field,
    parse_rational,
    series_invert,
    series_mul,
)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_prime_field_axioms_exhaustive(p):
    F = GF(p)
    xs = range(p)
    for a in xs:
        assert F.add(a, F.zero) == a and F.mul(a, F.one) == a
        assert F.add(a, F.neg(a)) == F.zero
        if a:
            assert F.mul(a, F.inv(a)) == F.one
        for b in xs:
            assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
            for c in xs:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        GF(3).inv(0)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        GF(4)


def test_mixed_fields_refused():
    with pytest.raises(FieldMismatchError):
        GF(2).elem(1) + GF(3).elem(1)


def test_parse_field_names():
    assert parse_field("gf2") == GF(2)
    assert parse_field("GF(3)") == GF(3)
    assert parse_field("q") == QQ
    with pytest.raises(ValueError):
        parse_field("reals")


def test_parse_rational_strings():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational(-4) == -4


def test_rational_field_reduces():
    assert QQ("2/4") == Fraction(1, 2)
    assert QQ.mul(Fraction(2, 3), Fraction(3, 2)) == 1


def long_division(num, den, N):
    # direct coefficient recurrence, written independently of the library
    out = []
    for n in range(N + 1):
        c = Fraction(num[n] if n < len(num) else 0)
        for k in range(1, min(n, len(den) - 1) + 1):
            c -= den[k] * out[n - k]
        out.append(c / den[0])
    return out


def test_geometric_series():
    assert expand_rational(RationalFunction((1,), (1, -1)), 6).as_ints() == [1] * 7


def test_square_series_expansion():
    # 1/(1-2t)^2 has coefficient (n+1) 2^n
    s = RationalFunction((1,), (1, -4, 4)).expand(8)
    assert s.as_ints() == [(n + 1) * 2**n for n in range(9)]


def test_truncation_is_minimum():
    a = TruncatedSeries([1, 1, 1, 1])
    b = TruncatedSeries([1, 2])
    assert (a * b).trunc_degree == 1
    assert (a + b).trunc_degree == 1


def test_invert_needs_unit_constant():
    with pytest.raises(ZeroDivisionError):
        series_invert(TruncatedSeries([0, 1]))


coeff_lists = st.lists(st.integers(-5, 5), min_size=1, max_size=8)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists)
def test_series_product_inverse(a, b):
    a[0] = a[0] or 1
    sa, sb = TruncatedSeries(a, 7), TruncatedSeries(b, 7)
    prod = series_mul(sa, sb)
    assert series_mul(prod, series_invert(sa)) == sb
    assert series_mul(sa, sb) == series_mul(sb, sa)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists)
def test_rational_expansion_matches_recurrence(num, den):
    den[0] = den[0] or 1
    got = RationalFunction(tuple(num), tuple(den)).expand(7)
    assert list(got.coeffs) == long_division([Fraction(c) for c in num], [Fraction(c) for c in den], 7)
    # multiplying back by the denominator recovers the numerator
    back = series_mul(got, TruncatedSeries(den, 7))
    assert list(back.coeffs) == [Fraction(num[n]) if n < len(num) else 0 for n in range(8)]
