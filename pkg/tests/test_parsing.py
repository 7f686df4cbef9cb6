"""Expression parser: grammar coverage, precedence, exact positions in
error messages, and the printer round trip."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from adaptcoord import BiPoly, parse
from adaptcoord.errors import (
    NonIntegerExponent,
    PolySyntaxError,
    UnknownVariable,
)
from conftest import bipolys


def test_monomials_and_aliases():
    assert parse("x1") == BiPoly.x1()
    assert parse("x") == BiPoly.x1()
    assert parse("x2") == BiPoly.x2()
    assert parse("y") == BiPoly.x2()
    assert parse("x^2*y") == parse("x1^2*x2")


def test_rational_coefficients():
    f = parse("1/2*x1*x2 - 3*x2^2")
    assert f.coeff(1, 1) == Fraction(1, 2)
    assert f.coeff(0, 2) == -3


def test_precedence_and_parentheses():
    assert parse("x1 + x2*x1^2") == parse("x1 + (x2*(x1^2))")
    assert parse("(x1 + x2)^2") == parse("x1^2 + 2*x1*x2 + x2^2")
    assert parse("-x1^2") == -parse("x1^2")  # unary minus binds the power
    assert parse("2^3*x1") == parse("8*x1")
    assert parse("x1 - x2 - x2") == parse("x1 - 2*x2")


def test_exponent_forms():
    assert parse("x1^(2)") == parse("x1^2")
    assert parse("x1^0") == BiPoly.constant(1)
    assert parse("0") == BiPoly.zero()


def test_no_implicit_multiplication():
    with pytest.raises(PolySyntaxError):
        parse("2x1")
    with pytest.raises(PolySyntaxError):
        parse("x1 x2")
    with pytest.raises(PolySyntaxError):
        parse("(x1+x2)(x1-x2)")


def test_unknown_variable_is_reported_with_position():
    with pytest.raises(UnknownVariable) as err:
        parse("x1 + z^2")
    assert err.value.line == 1
    assert err.value.col == 6
    assert "(line 1, column 6)" in str(err.value)


def test_fractional_exponent_rejected():
    with pytest.raises(NonIntegerExponent):
        parse("x1^(3/2)")
    with pytest.raises(NonIntegerExponent):
        parse("x2^(-1)")


def test_syntax_error_positions():
    with pytest.raises(PolySyntaxError) as err:
        parse("x1 + * x2")
    assert (err.value.line, err.value.col) == (1, 6)
    with pytest.raises(PolySyntaxError) as err:
        parse("x1 + (x2")
    assert err.value.line == 1
    with pytest.raises(PolySyntaxError):
        parse("")
    with pytest.raises(PolySyntaxError):
        parse("x1 +")


def test_multiline_positions():
    with pytest.raises(PolySyntaxError) as err:
        parse("x1^2 +\n  %x2")
    assert err.value.line == 2
    assert err.value.col == 3


def test_zero_denominator_rejected():
    with pytest.raises(PolySyntaxError):
        parse("1/0*x1^2")


def test_printer_examples():
    assert str(parse("x2^2 + x1^4 - 2*x1^2*x2")) == "x2^2 - 2*x1^2*x2 + x1^4"
    assert str(BiPoly.zero()) == "0"
    assert str(BiPoly.constant(Fraction(-1, 2))) == "-1/2"
    assert str(parse("x1*x2")) == "x1*x2"


@given(bipolys(min_terms=0, max_terms=7))
@settings(max_examples=120)
def test_parse_inverts_str(f):
    assert parse(str(f)) == f
