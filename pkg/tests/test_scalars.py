from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wsdalg.scalars import (
    DivisionByZero,
    GaussianRational,
    I,
    ONE,
    ZERO,
    ZeroDenominator,
    conjugate,
    format_scalar,
    normalize,
    parse_scalar,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero = gaussians.filter(bool)


def parts(z):
    return (z.re_num, z.re_den, z.im_num, z.im_den)


@pytest.mark.parametrize("args, want", [
    ((2, 4, 0, 1), (1, 2, 0, 1)),
    ((0, 1, -6, 4), (0, 1, -3, 2)),
    ((3, -6, 0, 1), (-1, 2, 0, 1)),
    ((0, 7, 0, -3), (0, 1, 0, 1)),
])
def test_normalize(args, want):
    assert parts(normalize(*args)) == want


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        normalize(1, 0, 0, 1)
    with pytest.raises(ZeroDenominator):
        normalize(1, 1, 1, 0)


def test_basic_products():
    assert I * I == -ONE
    assert parse_scalar("1/2*i") * parse_scalar("-2*i") == ONE
    assert ONE / GaussianRational(1, 1) == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    with pytest.raises(DivisionByZero):
        ONE / ZERO


def test_conjugate_examples():
    assert conjugate(GaussianRational(Fraction(1, 2), 1)) == GaussianRational(Fraction(1, 2), -1)
    assert conjugate(ZERO) == ZERO


@pytest.mark.parametrize("text", ["0", "-1/2", "2*i", "1/2-3/4*i", "1/2+3/4*i", "-3", "-5/7*i", "1*i"])
def test_format_roundtrip(text):
    assert format_scalar(parse_scalar(text)) == text


def test_parse_accepts_bare_i():
    assert parse_scalar("i") == I
    assert parse_scalar("-i") == -I


@pytest.mark.parametrize("bad", ["", "1/0", "i*2", "1.5", "1/2*j", "--1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_parse_normalizes_noncanonical_input():
    assert format_scalar(parse_scalar("2/4")) == "1/2"
    assert format_scalar(parse_scalar("-6/4*i")) == "-3/2*i"


def test_json_form():
    z = parse_scalar("1/2-3/4*i")
    assert z.to_json() == {"re": "1/2", "im": "-3/4"}
    assert GaussianRational.from_json(z.to_json()) == z


@given(gaussians, gaussians, gaussians)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(gaussians, nonzero)
def test_inverses(a, b):
    assert (a / b) * b == a
    assert b * (ONE / b) == ONE


@given(gaussians, gaussians)
def test_conjugate_is_automorphism(a, b):
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    assert conjugate(a + b) == conjugate(a) + conjugate(b)
    assert conjugate(conjugate(a)) == a


@given(gaussians, gaussians)
def test_results_stay_normalized(a, b):
    for z in (a + b, a - b, a * b, -a, conjugate(a)):
        assert parts(normalize(*parts(z))) == parts(z)
        assert z.re_den > 0 and z.im_den > 0
        assert format_scalar(parse_scalar(format_scalar(z))) == format_scalar(z)
