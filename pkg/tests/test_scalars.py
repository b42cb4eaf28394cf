from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orebc.errors import DivisionByZero, FieldMismatch
from orebc.scalars import QQ, FieldSpec, Scalar, characteristic, field_arith

GF7 = FieldSpec.prime(7)


def test_add_fractions():
    assert field_arith("add", Scalar(QQ, Fraction(1, 2)), Scalar(QQ, Fraction(1, 3))) == Fraction(5, 6)


def test_inverse_mod_7():
    assert field_arith("inv", Scalar(GF7, 3)).value == 5


@pytest.mark.parametrize("F", [QQ, GF7])
def test_inverse_of_zero(F):
    with pytest.raises(DivisionByZero):
        field_arith("inv", Scalar(F, 0))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        field_arith("add", Scalar(QQ, 1), Scalar(GF7, 1))


@pytest.mark.parametrize("F, char", [(QQ, 0), (GF7, 7), (FieldSpec.prime(2), 2)])
def test_characteristic(F, char):
    assert characteristic(F) == char


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 91])
def test_composite_modulus_rejected(bad):
    with pytest.raises(ValueError):
        FieldSpec.prime(bad)


@pytest.mark.parametrize("text, expected", [
    ("Q", QQ), ("QQ", QQ), ("GF(7)", GF7), ("7", GF7), ("F7", GF7),
])
def test_parse_field(text, expected):
    assert FieldSpec.parse(text) == expected


def test_canonical_forms():
    assert Scalar(QQ, Fraction(-2, -4)).value == Fraction(1, 2)
    assert Scalar(GF7, -1).value == 6
    assert Scalar(GF7, Fraction(1, 3)) == Scalar(GF7, 5)
    assert Scalar(QQ, "3/6") == Scalar(QQ, Fraction(1, 2))
    with pytest.raises(DivisionByZero):
        Scalar(GF7, Fraction(1, 7))


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)
primes = st.sampled_from([2, 3, 5, 7, 101, 65537])


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    a, b, c = Scalar(QQ, a), Scalar(QQ, b), Scalar(QQ, c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inv() == 1


@given(primes, st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, a, b, c):
    F = FieldSpec.prime(p)
    a, b, c = Scalar(F, a), Scalar(F, b), Scalar(F, c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert 0 <= (a - b).value < p
    if a:
        assert a * a.inv() == 1
        assert (b / a) * a == b
