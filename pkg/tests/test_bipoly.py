"""Sparse bivariate polynomials: construction, arithmetic, weights,
shears, and the x2-squarefree split."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adaptcoord import (
    BiPoly,
    ShearAxis,
    ShearChange,
    UniPoly,
    Weight,
    apply_jet,
    apply_shear,
    parse,
    scale_axes,
    squarefree_part_x2,
    swap_axes,
    weighted_order,
    weighted_part,
)
from adaptcoord.errors import ZeroPolynomial
from conftest import bipolys, coefficients

shear_exponents = st.integers(min_value=1, max_value=3)
nonzero_bipolys = bipolys().filter(lambda f: not f.is_zero)


def test_constructor_drops_zero_coefficients():
    f = BiPoly({(1, 1): Fraction(0), (2, 0): Fraction(3)})
    assert f.support == {(2, 0)}
    assert BiPoly({}).is_zero


def test_basic_accessors():
    f = parse("x2^2 - 2*x1^2*x2 + x1^4")
    assert f.x1_degree == 4
    assert f.x2_degree == 2
    assert f.min_x1 == 0
    assert f.min_x2 == 0
    assert f.origin_order == 2
    assert f.coeff(2, 1) == -2
    assert f.coeff(5, 5) == 0


def test_monomial_factories():
    assert BiPoly.x1() == BiPoly.monomial(1, 0)
    assert BiPoly.x2() == BiPoly.monomial(0, 1)
    assert BiPoly.constant(Fraction(1, 2)).coeff(0, 0) == Fraction(1, 2)
    assert BiPoly.zero().is_zero


@given(bipolys(), bipolys())
def test_addition_commutes_and_cancels(f, g):
    assert f + g == g + f
    assert (f + g) - g == f
    assert (f - f).is_zero


@given(bipolys(), bipolys(), bipolys())
@settings(max_examples=60)
def test_multiplication_distributes(f, g, h):
    assert f * (g + h) == f * g + f * h


def test_str_is_parse_compatible():
    f = parse("x2^2 - 2*x1^2*x2 + x1^4")
    assert str(f) == "x2^2 - 2*x1^2*x2 + x1^4"
    assert parse(str(f)) == f


@given(nonzero_bipolys)
@settings(max_examples=80)
def test_str_round_trips_through_parse(f):
    assert parse(str(f)) == f


def test_x2_coefficients_rows():
    f = parse("x2^2 - 2*x1^2*x2 + x1^4")
    rows = f.x2_coefficients()
    assert len(rows) == 3
    assert rows[0] == UniPoly.monomial(4)
    assert rows[1] == UniPoly.monomial(2, -2)
    assert rows[2] == UniPoly.one()


def test_weight_normalization_and_degree():
    w = Weight(Fraction(1, 4), Fraction(1, 2))
    assert w.ratio == 2
    q, p, m = w.reduced
    assert (q, p) == (1, 2)
    assert w.degree_of((2, 1)) == 1
    with pytest.raises(ValueError):
        Weight(Fraction(0), Fraction(0))


def test_weighted_order_and_part_partition():
    f = parse("x2^2 - 2*x1^2*x2 + x1^4 + x1^5")
    w = Weight(Fraction(1, 4), Fraction(1, 2))
    assert weighted_order(f, w) == 1
    assert weighted_part(f, w, 1) == parse("x2^2 - 2*x1^2*x2 + x1^4")
    assert weighted_part(f, w, Fraction(5, 4)) == parse("x1^5")


def test_weighted_order_rejects_zero():
    with pytest.raises(ZeroPolynomial):
        weighted_order(BiPoly.zero(), Weight(Fraction(1, 2), Fraction(1, 2)))


@given(nonzero_bipolys)
@settings(max_examples=60)
def test_weighted_parts_sum_back(f):
    w = Weight(Fraction(1, 3), Fraction(1, 2))
    degrees = {w.degree_of(t) for t in f.support}
    total = BiPoly.zero()
    for deg in degrees:
        total = total + weighted_part(f, w, deg)
    assert total == f


@given(nonzero_bipolys, coefficients, shear_exponents)
@settings(max_examples=80)
def test_shear_inverts_in_x2(f, b, m):
    fwd = ShearChange(ShearAxis.X2, b, m)
    back = ShearChange(ShearAxis.X2, -b, m)
    assert apply_shear(apply_shear(f, fwd), back) == f


@given(nonzero_bipolys, coefficients, shear_exponents)
@settings(max_examples=60)
def test_shear_inverts_in_x1(f, b, m):
    fwd = ShearChange(ShearAxis.X1, b, m)
    back = ShearChange(ShearAxis.X1, -b, m)
    assert apply_shear(apply_shear(f, fwd), back) == f


def test_shear_matches_hand_expansion():
    f = parse("x2^2")
    g = apply_shear(f, ShearChange(ShearAxis.X2, Fraction(1), 2))
    assert g == parse("x2^2 + 2*x1^2*x2 + x1^4")


def test_apply_jet_is_shear_composition():
    f = parse("(x2 - x1^2 - x1^3)^2")
    jet = [(Fraction(1), 2), (Fraction(1), 3)]
    assert apply_jet(f, jet) == parse("x2^2")


@given(nonzero_bipolys)
def test_swap_axes_is_involution(f):
    assert swap_axes(swap_axes(f)) == f
    assert {(k, j) for (j, k) in f.support} == swap_axes(f).support


@given(nonzero_bipolys, coefficients, coefficients)
@settings(max_examples=60)
def test_scale_axes_multiplies_coefficients(f, c1, c2):
    g = scale_axes(f, c1, c2)
    assert g.support == f.support
    for (j, k), c in f.terms().items():
        assert g.coeff(j, k) == c * c1**j * c2**k
    assert scale_axes(g, 1 / c1, 1 / c2) == f


def test_scale_axes_rejects_zero():
    with pytest.raises(ValueError):
        scale_axes(BiPoly.x1(), 0, 1)


def test_squarefree_part_x2_splits_multiplicity():
    f = parse("(x2 - x1^2)^2") * parse("x2 - x1^3")
    sf, factors = squarefree_part_x2(f)
    mults = sorted(m for _, m in factors)
    assert mults == [1, 2]
    rebuilt = BiPoly.constant(1)
    for base, m in factors:
        for _ in range(m):
            rebuilt = rebuilt * base
    # rebuild agrees up to an x1-content unit
    assert rebuilt.x2_degree == f.x2_degree
    for m, base in ((2, "x2 - x1^2"), (1, "x2 - x1^3")):
        assert any(
            mult == m and factor == parse(base) for factor, mult in factors
        )
    assert sf == parse("(x2 - x1^2)*(x2 - x1^3)")


@given(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=2),
)
def test_squarefree_part_x2_powers(m1, m2):
    f = parse("x2 - x1^2") ** m1 * parse("x2 + x1") ** m2
    sf, factors = squarefree_part_x2(f)
    assert sf.x2_degree == 2  # both distinct factors survive once
    assert {m for _, m in factors} == {m1, m2}
