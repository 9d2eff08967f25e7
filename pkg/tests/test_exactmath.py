from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, strategies as st

from cubicgalois.errors import NegativeInput, NotASquare, ParseError
from cubicgalois.exactmath import (format_rational, parse_rational, rat_sqrt,
                                   rationalize)

from conftest import rationals


def test_rat_sqrt_examples():
    assert rat_sqrt(81) == 9
    assert rat_sqrt(0) == 0
    # oracle: integer square roots of 729 and 25 separately
    assert (isqrt(729), isqrt(25)) == (27, 5)
    assert rat_sqrt(Fraction(729, 25)) == Fraction(27, 5)
    with pytest.raises(NotASquare):
        rat_sqrt(2)
    with pytest.raises(NotASquare):
        rat_sqrt(Fraction(4, 3))
    with pytest.raises(NegativeInput):
        rat_sqrt(-4)


@given(rationals(positive=True))
def test_rat_sqrt_of_square(r):
    assert rat_sqrt(r * r) == r


@given(rationals(positive=True))
def test_rat_sqrt_result_squares_back(x):
    try:
        r = rat_sqrt(x)
    except NotASquare:
        return
    assert r * r == x


def test_rationalize_examples():
    assert rationalize(0.5, 10) == Fraction(1, 2)
    assert rationalize(0.3333333333, 100) == Fraction(1, 3)
    assert rationalize(-1.9999999, 10) == -2


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4))
def test_rationalize_recovers_fraction(p, q):
    x = Fraction(p, q)
    assert rationalize(float(x), q) == x


@given(rationals(10**30, 10**30), rationals(10**30, 10**30))
def test_arithmetic_is_exact(a, b):
    assert (a + b) - b == a
    if b:
        assert (a * b) / b == a


def test_text_form():
    assert format_rational(Fraction(27, 5)) == "27/5"
    assert format_rational(Fraction(-9, 1)) == "-9"
    assert parse_rational(" -343/36 ") == Fraction(-343, 36)
    assert parse_rational("12") == 12
    with pytest.raises(ParseError):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational("abc")


@given(rationals(10**20, 10**20))
def test_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x
