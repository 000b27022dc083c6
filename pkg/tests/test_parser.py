"""Tests for the polynomial text parser."""

import pytest

from errors import DivisionByZero, NonIntegerExponent, PolySyntaxError, UnknownVariable
from polys import FieldSpec, parse_poly

VARIABLES = ("x0", "x1", "x2")


def parse(text, field=None):
    return parse_poly(text, VARIABLES, field or FieldSpec.rationals())


def test_parse_canonicalizes():
    """Test that equivalent inputs give the same canonical polynomial."""
    a = parse("(x0 + x1)^2 - 2*x0*x1")
    b = parse("x1^2 + x0 ^ 2")

    assert a == b
    assert str(a) == "x0^2 + x1^2"


def test_parse_precedence():
    """Test that ^ binds tighter than unary minus and * tighter than +."""
    assert str(parse("-x0^2")) == "-x0^2"
    assert str(parse("2 + 3*x1")) == "3*x1 + 2"
    assert parse("-(x0 - x1)") == parse("x1 - x0")


def test_parse_rationals():
    """Test rational literals over QQ and inside GF(p)."""
    assert str(parse("3/6*x2")) == "1/2*x2"
    assert str(parse("1/2", FieldSpec.prime(5))) == "3"


def test_juxtaposition_is_a_syntax_error():
    """Test that a missing operator is reported at the offending token."""
    with pytest.raises(PolySyntaxError) as excinfo:
        parse("x0 x1")
    assert excinfo.value.location == 3


@pytest.mark.parametrize("text", ["x0 +", "", "(x0", "x0 ** 2"])
def test_malformed_input(text):
    """Test that incomplete or malformed input raises PolySyntaxError."""
    with pytest.raises(PolySyntaxError):
        parse(text)


def test_unknown_variable_reports_position():
    """Test that an undeclared name is reported with its offset."""
    with pytest.raises(UnknownVariable) as excinfo:
        parse("x0 + z")
    assert excinfo.value.location == 5
    assert excinfo.value.to_dict()["code"] == "UnknownVariable"


@pytest.mark.parametrize("text", ["x0^2.5", "x0^-1", "x0^x1", "x0^(2)", "x0^1/2"])
def test_exponent_must_be_integer_literal(text):
    """Test that only non-negative integer literals are accepted as exponents."""
    with pytest.raises(NonIntegerExponent):
        parse(text)


def test_division_by_zero_literal():
    """Test that 1/0 and a denominator divisible by p are rejected."""
    with pytest.raises(DivisionByZero):
        parse("1/0")
    with pytest.raises(DivisionByZero):
        parse("x0 + 1/5", FieldSpec.prime(5))


def test_ring_parse_uses_ring_order(qq3):
    """Test that Ring.parse carries the ring's variables and field."""
    f = qq3.parse("x2 + x0")

    assert f.ring == qq3
    assert f.leading_monomial() == (1, 0, 0)
