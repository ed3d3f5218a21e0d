from fractions import Fraction

import pytest

from csymlie.scalars import (
    GaussianRational,
    I,
    format_scalar,
    parse_scalar,
    to_gaussian,
)


def test_gaussian_field_arithmetic():
    a = GaussianRational(Fraction(1, 2), Fraction(3))
    b = GaussianRational(Fraction(-2), Fraction(1, 3))
    assert a + b == GaussianRational(Fraction(-3, 2), Fraction(10, 3))
    assert a * b == GaussianRational(
        Fraction(1, 2) * Fraction(-2) - Fraction(3) * Fraction(1, 3),
        Fraction(1, 2) * Fraction(1, 3) + Fraction(3) * Fraction(-2),
    )
    assert (a / b) * b == a
    assert a - a == GaussianRational(0)
    assert not (a - a)


def test_gaussian_interops_with_fraction_and_int():
    a = GaussianRational(1, 1)
    assert a + 1 == GaussianRational(2, 1)
    assert 1 + a == GaussianRational(2, 1)
    assert Fraction(1, 2) * a == GaussianRational(Fraction(1, 2), Fraction(1, 2))
    assert a - Fraction(1) == I
    assert GaussianRational(3, 0) == Fraction(3)
    assert I * I == -1


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1) / GaussianRational(0)


@pytest.mark.parametrize(
    "value,text",
    [
        (Fraction(3), "3"),
        (Fraction(-2, 5), "-2/5"),
        (GaussianRational(Fraction(1, 2), Fraction(3, 4)), "1/2+3/4 i"),
        (GaussianRational(Fraction(1, 2), Fraction(-3, 4)), "1/2-3/4 i"),
        (GaussianRational(0, 1), "0+1 i"),
    ],
)
def test_format_parse_round_trip(value, text):
    assert format_scalar(value) == text
    parsed = parse_scalar(text)
    assert to_gaussian(parsed) == to_gaussian(value)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_scalar("1/2 + x")
