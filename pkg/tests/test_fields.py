from fractions import Fraction

import numpy as np
import pytest

from koszul_lab.algebra.fields import (
    OMEGA, QQ, QQ_OMEGA, CycloNumber, PrimeField, embed, field_from_name, parse_rational, render_rational,
)
from koszul_lab.errors import FieldError, ParseError


def test_omega_is_a_primitive_cube_root():
    one = CycloNumber(1, 0)
    assert OMEGA * OMEGA == CycloNumber(-1, -1)
    assert OMEGA * OMEGA * OMEGA == one
    assert one + OMEGA + OMEGA * OMEGA == CycloNumber()


@pytest.mark.parametrize("a,b", [(2, 3), (Fraction(1, 2), -1), (0, 5), (-7, 0)])
def test_cyclotomic_inverse(a, b):
    x = CycloNumber(a, b)
    assert x * x.inverse() == CycloNumber(1, 0)
    assert x / x == CycloNumber(1, 0)


def test_cyclotomic_division_by_zero():
    with pytest.raises(FieldError):
        CycloNumber().inverse()


def test_complex_embedding_is_multiplicative():
    x, y = CycloNumber(Fraction(1, 3), 2), CycloNumber(-1, Fraction(5, 4))
    assert np.isclose(complex(OMEGA), np.exp(2j * np.pi / 3))
    assert np.isclose(complex(x * y), complex(x) * complex(y))
    assert np.isclose(complex(x.conjugate()), np.conj(complex(x)))


@pytest.mark.parametrize("text,expected", [
    ("(1/2+3*w)", CycloNumber(Fraction(1, 2), 3)),
    ("-w", CycloNumber(0, -1)),
    ("(1-2w)", CycloNumber(1, -2)),
    ("7/3", CycloNumber(Fraction(7, 3), 0)),
])
def test_cyclotomic_parse(text, expected):
    assert QQ_OMEGA.parse(text) == expected


def test_cyclotomic_render_parses_back():
    for value in (CycloNumber(Fraction(1, 2), -3), CycloNumber(0, 2), CycloNumber(4, 0)):
        assert QQ_OMEGA.parse(QQ_OMEGA.render(value)) == value


def test_prime_field_arithmetic():
    f = PrimeField(7)
    assert f.coerce(Fraction(1, 2)) == 4
    assert f.mul(4, 2) == 1
    assert f.inv(3) == 5
    assert f.coerce(-1) == 6
    with pytest.raises(FieldError):
        f.inv(0)
    with pytest.raises(FieldError):
        f.coerce(Fraction(1, 7))


@pytest.mark.parametrize("modulus", [1, 4, 9, 2147483649])
def test_prime_field_needs_a_prime(modulus):
    with pytest.raises(FieldError, match="not a prime modulus"):
        PrimeField(modulus)


def test_prime_field_cube_root_of_unity():
    f = PrimeField(7)
    root = f.cube_root_of_unity()
    assert root != 1 and pow(root, 3, 7) == 1
    assert embed(OMEGA, f) == root
    with pytest.raises(FieldError):
        PrimeField(5).cube_root_of_unity()


@pytest.mark.parametrize("name,expected", [
    ("rational", QQ),
    ("Q", QQ),
    ("cyclotomic", QQ_OMEGA),
    ("Q(w)", QQ_OMEGA),
    ("prime:13", PrimeField(13)),
    ("prime", PrimeField(2147483647)),
])
def test_field_from_name(name, expected):
    assert field_from_name(name) == expected


@pytest.mark.parametrize("name", ["reals", "prime:x", "", "prime:9", "prime:1"])
def test_field_from_name_rejects(name):
    with pytest.raises(ParseError):
        field_from_name(name)


def test_descriptor_round_trip():
    for field in (QQ, QQ_OMEGA, PrimeField(31)):
        assert field_from_name(field.descriptor()) == field


def test_rationals():
    assert parse_rational("−2/5") == Fraction(-2, 5)
    assert parse_rational(" 3 ") == Fraction(3)
    assert render_rational(Fraction(6, 4)) == "3/2"
    assert render_rational(Fraction(-4, 2)) == "-2"
    with pytest.raises(ParseError):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational("x")
    with pytest.raises(FieldError):
        QQ.inv(Fraction(0))
    with pytest.raises(FieldError):
        QQ.coerce(OMEGA)
