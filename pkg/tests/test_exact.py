import copy
import pickle
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from xratio.exact import (
    INF,
    IndeterminateError,
    InfinityArithmeticError,
    add,
    as_ext,
    canonical,
    div,
    make_rational,
    mul,
    parse_value,
    primitive_vector,
    sub,
)

from conftest import small_rationals


@pytest.mark.parametrize(
    "num, den, expected",
    [
        (2, 4, Fraction(1, 2)),
        (3, -6, Fraction(-1, 2)),
        (0, 7, Fraction(0)),
        (-4, -8, Fraction(1, 2)),
    ],
)
def test_make_rational_canonical(num, den, expected):
    v = make_rational(num, den)
    assert v == expected
    assert (v.numerator, v.denominator) == (expected.numerator, expected.denominator)


def test_division_by_zero_is_infinity():
    assert make_rational(5, 0) is INF
    assert make_rational(-5, 0) is INF
    assert div(Fraction(1), Fraction(0)) is INF


def test_zero_over_zero_rejected():
    with pytest.raises(IndeterminateError):
        make_rational(0, 0)
    with pytest.raises(IndeterminateError):
        div(Fraction(0), Fraction(0))


def test_field_ops():
    assert add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert sub(Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 6)
    assert mul(Fraction(2, 3), Fraction(9, 4)) == Fraction(3, 2)
    assert div(Fraction(2, 3), Fraction(4)) == Fraction(1, 6)


@pytest.mark.parametrize("op", [add, sub, mul, div])
def test_infinity_arithmetic_is_an_error(op):
    with pytest.raises(InfinityArithmeticError):
        op(INF, Fraction(2))
    with pytest.raises(InfinityArithmeticError):
        op(Fraction(2), INF)


def test_infinity_is_a_singleton():
    assert copy.deepcopy(INF) is INF
    assert pickle.loads(pickle.dumps(INF)) is INF
    assert as_ext("oo") is INF
    assert canonical(INF) is INF


def test_parse_value():
    assert parse_value(" -6/4 ") == Fraction(-3, 2)
    assert parse_value("17") == Fraction(17)
    with pytest.raises(ValueError):
        parse_value("1/0")


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6).filter(bool),
       st.integers(-1000, 1000).filter(bool))
def test_scaling_round_trip(p, q, k):
    assert make_rational(p, q) == make_rational(k * p, k * q)


@given(small_rationals(), small_rationals(), small_rationals())
def test_field_axioms(x, y, z):
    assert add(add(x, y), z) == add(x, add(y, z))
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
    assert add(x, sub(Fraction(0), x)) == 0
    if x != 0:
        assert mul(x, div(Fraction(1), x)) == 1


@given(small_rationals(), small_rationals())
def test_recanonicalizing_is_identity(x, y):
    v = add(mul(x, y), y)
    c = canonical(v)
    assert (c.numerator, c.denominator) == (v.numerator, v.denominator)


@given(st.lists(small_rationals(), min_size=1, max_size=5).filter(lambda v: any(v)),
       small_rationals().filter(bool))
def test_primitive_vector_is_scale_invariant(vec, k):
    assert primitive_vector(vec) == primitive_vector([k * v for v in vec])
