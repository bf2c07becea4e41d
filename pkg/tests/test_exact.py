from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, strategies as st

from radmoments.errors import MixedPowerError, NonPositiveArgument
from radmoments.exact import ExactValue, HalfInteger, gamma_exact, gamma_ratio, pochhammer, to_float

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
positive_halves = st.integers(min_value=1, max_value=200).map(HalfInteger)


def test_pochhammer_examples():
    assert pochhammer(F(7, 3), 0) == 1
    assert pochhammer(1, 3) == 6
    assert pochhammer(F(1, 2), 2) == F(3, 4)
    assert pochhammer(-2, 5) == 0
    assert pochhammer(-3, 2) == 6


@given(rationals, st.integers(0, 12), st.integers(0, 12))
def test_pochhammer_splits(a, j, k):
    assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


@pytest.mark.parametrize(
    "x, expected",
    [
        (HalfInteger(1), ExactValue(1, 1)),
        (HalfInteger(6), ExactValue(2, 0)),
        (HalfInteger(7), ExactValue(F(15, 8), 1)),
    ],
)
def test_gamma_exact_examples(x, expected):
    assert gamma_exact(x) == expected


@pytest.mark.parametrize("tv", [0, -1, -2, -7])
def test_gamma_rejects_nonpositive(tv):
    with pytest.raises(NonPositiveArgument):
        gamma_exact(HalfInteger(tv))
    with pytest.raises(NonPositiveArgument):
        gamma_ratio(HalfInteger(tv), HalfInteger(3))


@pytest.mark.parametrize("tv", [1, 2, 3, 8, 13, 40, 81])
def test_gamma_exact_against_mpmath(tv):
    with mpmath.workdps(40):
        assert abs(to_float(gamma_exact(HalfInteger(tv)), 120) / mpmath.gamma(mpmath.mpf(tv) / 2) - 1) < mpmath.mpf(10) ** -30


def test_gamma_ratio_examples():
    assert gamma_ratio(F(9, 2), F(9, 2)) == ExactValue(1)
    assert gamma_ratio(F(5, 2), F(3, 2)) == ExactValue(F(3, 2))
    assert gamma_ratio(2, F(3, 2)) == ExactValue(2, -1)


@given(positive_halves)
def test_functional_equation(x):
    assert gamma_ratio(x + 1, x) == ExactValue(x.value)


@given(positive_halves, positive_halves, positive_halves)
def test_gamma_ratio_chains(a, b, c):
    prod = gamma_ratio(a, b) * gamma_ratio(b, c)
    assert prod == gamma_ratio(a, c)
    assert gamma_ratio(a, c).sqrtpi_exp in (-1, 0, 1)


@given(positive_halves, positive_halves)
def test_gamma_ratio_matches_quotient(a, b):
    assert gamma_ratio(a, b) == gamma_exact(a) / gamma_exact(b)


exact_values = st.builds(ExactValue, rationals, st.integers(-4, 4))


@given(exact_values, exact_values, exact_values)
def test_multiplication_algebra(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x


def test_zero_normalizes_power():
    assert ExactValue(0, 3).sqrtpi_exp == 0


def test_mixed_addition_is_an_error():
    with pytest.raises(MixedPowerError):
        ExactValue(1, 1) + ExactValue(1, 0)
    assert ExactValue(2, 1) + ExactValue(F(1, 2), 1) == ExactValue(F(5, 2), 1)
    assert ExactValue(2, 1) + 0 == ExactValue(2, 1)


def test_to_float_examples():
    assert to_float(ExactValue(1, 0)) == 1.0
    assert to_float(ExactValue(F(3, 2), 0)) == 1.5
    with mpmath.workdps(50):
        oracle = float(2 / mpmath.sqrt(mpmath.pi))
    assert to_float(ExactValue(2, -1)) == oracle == 1.1283791670955126


def test_to_float_high_precision():
    v = to_float(ExactValue(1, 2), precision=200)
    with mpmath.workprec(200):
        assert v == +mpmath.pi


@pytest.mark.parametrize(
    "value, text",
    [
        (ExactValue(F(7, 2)), "7/2"),
        (ExactValue(2, -1), "2*sqrt(pi)^-1"),
        (ExactValue(F(225, 16), 1), "225/16*sqrt(pi)^1"),
    ],
)
def test_text_rendering_round_trip(value, text):
    assert str(value) == text
    assert ExactValue.parse(text) == value
    assert ExactValue.from_fields(value.to_fields()) == value


def test_structured_fields_are_strings():
    assert ExactValue(F(-3, 4), 1).to_fields() == {"num": "-3", "den": "4", "sqrtpi_exp": "1"}


def test_half_integer_coercion():
    assert HalfInteger.of(F(7, 2)) == HalfInteger(7)
    assert HalfInteger.of(3).is_integer
    with pytest.raises(ValueError):
        HalfInteger.of(F(1, 3))
