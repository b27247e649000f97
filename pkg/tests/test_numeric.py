import math
import pickle
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import scalars
from ranklab.numeric import (
    EQUAL, GREATER, INFINITY, LESS, Scalar, ScalarParseError, add, compare, div, format_scalar, mul, parse_scalar, sub,
)


@pytest.mark.parametrize('text, expected', [
    ('0', Scalar(0)),
    ('3.25', Scalar(13, 4)),
    ('-6/4', Scalar(-3, 2)),
    ('-17', Scalar(-17)),
    ('+2', Scalar(2)),
    ('0.1', Scalar(1, 10)),
    (' 7/1 ', Scalar(7)),
])
def test_parse_known_values(text, expected):
    value = parse_scalar(text)
    assert value == expected
    assert (value.numerator, value.denominator) == (expected.numerator, expected.denominator)


def test_parse_zero_is_canonical():
    zero = parse_scalar('-0')
    assert (zero.numerator, zero.denominator) == (0, 1)


@pytest.mark.parametrize('text', ['1e5', '2.5E-3', 'abc', '', '1/0', '3.', '.5', '1/-2', '1.5/2', 'inf', '1 2',
                                  '\u0663', '1/\u0663', '\uff11.5'])
def test_parse_rejects(text):
    with pytest.raises(ScalarParseError) as info:
        parse_scalar(text)
    assert repr(text.strip()) in str(info.value)


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        parse_scalar('1e3')


def test_floats_are_refused():
    with pytest.raises(TypeError):
        Scalar(0.5)


def test_arithmetic_examples():
    assert add(Scalar(1, 3), Scalar(1, 6)) == Scalar(1, 2)
    assert mul(Scalar(3), Scalar(5)) == Scalar(15)
    difference = sub(Scalar(7, 2), Scalar(7, 2))
    assert (difference.numerator, difference.denominator) == (0, 1)
    assert div(Scalar(3), Scalar(4)) == Scalar(3, 4)
    with pytest.raises(ZeroDivisionError):
        div(Scalar(1), Scalar(0))


def test_compare_examples():
    assert compare(Scalar(1, 3), Scalar(2, 6)) == EQUAL
    assert compare(Scalar(-1, 2), Scalar(0)) == LESS
    assert compare(Scalar(10, 3), Scalar(3)) == GREATER


def test_format_round_trips_through_parse():
    for value in (Scalar(0), Scalar(-3, 2), Scalar(13, 4), Scalar(10 ** 30, 7)):
        assert parse_scalar(format_scalar(value)) == value
    assert format_scalar(INFINITY) == 'inf'
    assert str(Scalar(-3, 2)) == '-3/2'


def test_infinity_is_above_everything():
    assert INFINITY.compare(Scalar(10 ** 40)) == GREATER
    assert INFINITY.compare(INFINITY) == EQUAL
    assert pickle.loads(pickle.dumps(INFINITY)) is INFINITY


def test_pickle_keeps_value():
    assert pickle.loads(pickle.dumps(Scalar(-22, 6))) == Scalar(-11, 3)


@given(scalars, scalars)
@settings(max_examples=200)
def test_canonical_form_after_every_operation(a, b):
    results = [add(a, b), sub(a, b), mul(a, b), -a, abs(a)]
    if not b.is_zero():
        results.append(div(a, b))
    for value in results:
        assert value.denominator > 0
        assert math.gcd(abs(value.numerator), value.denominator) == 1


@given(scalars, scalars)
@settings(max_examples=200)
def test_arithmetic_is_exact(a, b):
    assert sub(add(a, b), b) == a
    assert add(a, b).fraction == a.fraction + b.fraction


@given(scalars, scalars, scalars)
@settings(max_examples=200)
def test_compare_is_a_total_order(a, b, c):
    assert compare(a, b) == -compare(b, a)
    assert (compare(a, b) == EQUAL) == sub(a, b).is_zero()
    if compare(a, b) <= 0 and compare(b, c) <= 0:
        assert compare(a, c) <= 0


@given(st.fractions(max_denominator=10 ** 6))
@settings(max_examples=100)
def test_ratio_text_parses_exactly(value):
    assert parse_scalar(f'{value.numerator}/{value.denominator}').fraction == Fraction(value)
