from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arratlas.errors import DuplicateAbscissa, NonIntegerCoefficient, NonInvertibleSeries
from arratlas.exactmath import (
    Polynomial,
    TruncatedSeries,
    interpolate,
    poly_eval,
    poly_product_chain,
    poly_shift,
    series_exp,
    series_inv,
    series_mul,
    series_pow,
)

int_coeffs = st.lists(st.integers(-10**6, 10**6), max_size=8)


def test_trailing_zeros_are_stripped():
    p = Polynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Polynomial((0, 0)).is_zero()
    assert Polynomial().degree == -1


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        Polynomial((Fraction(1, 2),))
    with pytest.raises(TypeError):
        Polynomial((True,))


def test_str():
    assert str(Polynomial((6, -5, 1))) == "t^2 - 5t + 6"
    assert str(Polynomial((0, 1))) == "t"
    assert str(Polynomial((-1,))) == "-1"
    assert str(Polynomial()) == "0"


def test_arithmetic():
    p, q = Polynomial((1, 1)), Polynomial((-1, 1))
    assert p * q == Polynomial((-1, 0, 1))
    assert p + q == Polynomial((0, 2))
    assert p - p == Polynomial()
    assert 3 * p == Polynomial((3, 3))
    assert p(4) == 5


@given(int_coeffs, st.integers(-50, 50))
def test_eval_matches_naive_sum(cs, t):
    p = Polynomial(tuple(cs))
    assert poly_eval(p, t) == sum(c * t**k for k, c in enumerate(cs))


@given(int_coeffs, st.integers(-20, 20), st.integers(-50, 50))
def test_shift_is_substitution(cs, c, t):
    p = Polynomial(tuple(cs))
    assert poly_eval(poly_shift(p, c), t) == poly_eval(p, t - c)


@given(int_coeffs)
def test_json_round_trip(cs):
    p = Polynomial(tuple(cs))
    assert Polynomial.from_json(p.to_json()) == p
    assert all(isinstance(c, str) for c in p.to_json()["coeffs"])


def test_product_chain():
    assert poly_product_chain([]) == Polynomial((1,))
    assert poly_product_chain([2, 3]) == Polynomial((6, -5, 1))
    p = poly_product_chain([1, 3, 5, 7])
    assert [poly_eval(p, r) for r in (1, 3, 5, 7)] == [0, 0, 0, 0]
    assert p.is_monic() and p.degree == 4


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=7), st.integers(-30, 30))
def test_interpolation_recovers_integer_polynomial(cs, start):
    p = Polynomial(tuple(cs))
    xs = range(start, start + len(cs))
    assert interpolate([(x, poly_eval(p, x)) for x in xs]) == p


def test_interpolation_with_uneven_abscissae():
    p = Polynomial((11559, -14284, 7320, -2010, 315, -27, 1))
    xs = [15, 17, 19, 21, 23, 25, 27]
    assert interpolate([(x, p(x)) for x in xs]) == p


def test_interpolation_errors():
    with pytest.raises(DuplicateAbscissa):
        interpolate([(1, 2), (1, 3)])
    with pytest.raises(NonIntegerCoefficient):
        interpolate([(0, 0), (2, 1)])  # t/2
    assert interpolate([]) == Polynomial()


def test_series_exp_of_x():
    e = series_exp(TruncatedSeries.x(8))
    assert list(e.coeffs) == [Fraction(1, factorial(k)) for k in range(9)]


def test_series_inverse_of_one_minus_x():
    inv = series_inv(1 - TruncatedSeries.x(6))
    assert list(inv.coeffs) == [1] * 7
    with pytest.raises(NonInvertibleSeries):
        series_inv(TruncatedSeries.x(3))


def test_series_exp_needs_zero_constant():
    with pytest.raises(ValueError):
        series_exp(TruncatedSeries.constant(1, 3))


def test_ordered_bell_egf():
    # 1 / (2 - e^x) has EGF coefficients 1, 1, 3, 13, 75, 541
    x = TruncatedSeries.x(5)
    s = 1 / (2 - series_exp(x))
    assert s.egf_values() == [1, 1, 3, 13, 75, 541]


@given(st.lists(st.fractions(max_denominator=5), min_size=1, max_size=6), st.integers(0, 5))
def test_series_pow_matches_repeated_product(cs, k):
    s = TruncatedSeries(5, tuple(cs))
    expected = TruncatedSeries.constant(1, 5)
    for _ in range(k):
        expected = series_mul(expected, s)
    assert series_pow(s, k) == expected == s**k


def test_series_division_round_trip():
    rng = random.Random(3)
    a = TruncatedSeries(6, tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(7)))
    b = TruncatedSeries(6, (Fraction(2),) + tuple(Fraction(rng.randint(-5, 5)) for _ in range(6)))
    assert (a / b) * b == a


def test_series_truncation_orders_must_match():
    with pytest.raises(ValueError):
        TruncatedSeries.x(3) + TruncatedSeries.x(4)
    with pytest.raises(ValueError):
        series_pow(TruncatedSeries.x(3), -1)
