"""Adaptedness decision and the shear iteration: exact heights, jets,
step traces, and the exact non-termination certificate."""

from __future__ import annotations

from fractions import Fraction

import pytest

from adaptcoord import (
    AdaptStatus,
    FaceKind,
    adapt,
    apply_jet,
    check_adapted,
    distance,
    height,
    newton_polyhedron,
    parse,
    shear_step,
    swap_axes,
)
from adaptcoord.errors import (
    AlreadyAdapted,
    IterationCapExceeded,
    NonvanishingGradient,
    NotFiniteType,
)

# (input, exact height) pairs worked out by hand
HEIGHT_CASES = [
    ("x1^2 + x2^2", Fraction(1)),
    ("x1*x2^2 - x1^3*x2", Fraction(5, 3)),
    ("(x2 - x1^2)^2", Fraction(2)),
    ("(x2 - x1^2)^2 + x1^5", Fraction(10, 7)),
    ("(x2^2 - x1^3)^2", Fraction(12, 5)),
    ("(x2 - x1^2)^2 + x1^6", Fraction(3, 2)),
    ("(x2 - x1^2)^2 + x1^7", Fraction(14, 9)),
    ("x1*(x2 - x1)^2", Fraction(2)),
    ("(x2 - x1^2 - x1^3)^2", Fraction(2)),
    ("(x2 - x1^2 - x1^3)^2 + x1^9", Fraction(18, 11)),
    ("(x2 + 2*x1^2)^2 + x1^7", Fraction(14, 9)),
    ("x2^3 - 3*x1^2*x2 + 2*x1^3", Fraction(2)),
    ("(x2 - x1^2)^3 + x1^10", Fraction(30, 13)),
    ("(x1 - x2^2)^2 + x2^5", Fraction(10, 7)),
]


@pytest.mark.parametrize("src,expected", HEIGHT_CASES)
def test_exact_heights(src, expected):
    assert height(parse(src)) == expected


def test_check_adapted_vertex_face():
    rep = check_adapted(parse("x1^2*x2^2 + x1^5 + x2^5"))
    assert rep.adapted
    assert not rep.condition_a
    assert rep.condition_b  # vertex faces satisfy the ratio condition
    assert not rep.condition_c
    assert rep.witness is None
    assert rep.distance == 2
    assert rep.face.kind is FaceKind.VERTEX
    assert (rep.weight.k1, rep.weight.k2) == (Fraction(1, 4), Fraction(1, 4))


def test_check_adapted_halfline_face():
    rep = check_adapted(parse("x2^2"))
    assert rep.adapted
    assert not rep.condition_a
    assert not rep.condition_b
    assert rep.face.kind is FaceKind.HORIZONTAL_HALFLINE


def test_check_adapted_edge_fractional_ratio():
    rep = check_adapted(parse("x2^2 - x1^3"))
    assert rep.adapted
    assert rep.condition_a
    assert not rep.condition_b  # ratio 3/2 not an integer
    assert rep.distance == Fraction(6, 5)


def test_check_adapted_edge_low_multiplicity():
    # ratio 1, but no root multiplicity exceeds d = 1
    rep = check_adapted(parse("x2^2 - x1^2"))
    assert rep.adapted
    assert rep.condition_a and rep.condition_b and not rep.condition_c


def test_check_adapted_non_adapted_witness():
    rep = check_adapted(parse("(x2 - x1^2)^2 + x1^5"))
    assert not rep.adapted
    assert rep.condition_a and rep.condition_b and rep.condition_c
    assert rep.witness is not None
    assert rep.witness.coefficient == 1
    assert rep.witness.exponent == 2
    assert rep.witness.multiplicity == 2
    assert rep.distance == Fraction(4, 3)


def test_check_adapted_swaps_axes_when_needed():
    rep = check_adapted(parse("(x1 - x2^2)^2 + x2^5"))
    assert rep.axis_swapped
    assert not rep.adapted
    assert rep.witness.exponent == 2  # witness is for the swapped input


def test_boundary_multiplicity_equal_to_distance_is_adapted():
    # principal part x2*(x2 - x1^2)^2 at d = 2: multiplicity 2 = d, not >
    f = parse("(x2 - x1^2)^2 * (x2 - x1^3) + x1^12")
    rep = check_adapted(f)
    assert rep.distance == 2
    assert rep.condition_a and rep.condition_b and not rep.condition_c
    assert rep.adapted


def test_shear_step_increases_distance():
    f = parse("(x2 - x1^2)^2 + x1^5")
    change, g = shear_step(f)
    assert change.coefficient == 1
    assert change.exponent == 2
    assert g == parse("x2^2 + x1^5")
    assert distance(newton_polyhedron(g)) > distance(newton_polyhedron(f))


def test_shear_step_rejects_adapted_input():
    with pytest.raises(AlreadyAdapted):
        shear_step(parse("x2^2 - x1^3"))


def test_adapt_terminating_trace():
    res = adapt(parse("(x2 - x1^2 - x1^3)^2 + x1^9"))
    assert res.status is AdaptStatus.TERMINATED
    assert res.height == Fraction(18, 11)
    assert res.jet.terms == ((Fraction(1), 2), (Fraction(1), 3))
    assert not res.jet.truncated
    assert not res.axis_swapped
    assert res.final_poly == parse("x2^2 + x1^9")
    assert [s.exponent for s in res.steps] == [2, 3]
    assert [s.multiplicity for s in res.steps] == [2, 2]
    # each step records the distance before its shear
    assert [s.distance for s in res.steps] == [Fraction(4, 3), Fraction(3, 2)]


def test_adapt_applies_jet_consistently():
    f = parse("(x2 - x1^2 + x1^4)^2 + x1^9")
    res = adapt(f)
    assert res.status is AdaptStatus.TERMINATED
    assert apply_jet(f, res.jet.terms) == res.final_poly
    assert distance(newton_polyhedron(res.final_poly)) == res.height


def test_adapt_swapped_input_reports_frame():
    f = parse("(x1 - x2^2)^2 + x2^5")
    res = adapt(f)
    assert res.axis_swapped
    assert res.height == Fraction(10, 7)
    assert apply_jet(swap_axes(f), res.jet.terms) == res.final_poly


def test_adapt_zero_and_low_order_inputs():
    with pytest.raises(NotFiniteType):
        adapt(parse("0"))
    with pytest.raises(NonvanishingGradient):
        adapt(parse("x2 + x1^2"))


def test_adapt_already_adapted_is_a_fixed_point():
    res = adapt(parse("x2^2 - x1^3"))
    assert res.status is AdaptStatus.TERMINATED
    assert res.jet.terms == ()
    assert res.steps == ()
    assert res.height == Fraction(6, 5)
    assert res.final_poly == parse("x2^2 - x1^3")


def test_adapt_exact_cap_boundary_still_terminates():
    # two shears needed; cap exactly two must succeed
    res = adapt(parse("(x2 - x1^2 - x1^3)^2 + x1^9"), max_steps=2)
    assert res.status is AdaptStatus.TERMINATED
    assert res.height == Fraction(18, 11)


def test_nontermination_certificate():
    res = adapt(parse("(x2*(1 + x1) - x1^2)^2"), max_steps=8)
    assert res.status is AdaptStatus.NONTERMINATING_CERTIFIED
    assert res.height == 2
    assert res.jet.truncated
    assert res.jet.terms[:4] == (
        (Fraction(1), 2),
        (Fraction(-1), 3),
        (Fraction(1), 4),
        (Fraction(-1), 5),
    )
    # geometric trace d_k = 2k/(k+1) for the exponent-k step
    for step in res.steps:
        k = step.exponent
        assert step.distance == Fraction(2 * k, k + 1)
        assert step.multiplicity == 2


def test_certificate_is_cap_insensitive():
    small = adapt(parse("(x2*(1 + x1) - x1^2)^2"), max_steps=5)
    assert small.status is AdaptStatus.NONTERMINATING_CERTIFIED
    assert small.height == 2
    assert len(small.jet.terms) == 5


def test_terminating_decoy_is_not_certified():
    # finite jet of length 4; at cap 3 the multiplicities have stabilized
    # but the certificate must refuse (the root is still polynomial)
    with pytest.raises(IterationCapExceeded):
        adapt(parse("(x2 - x1^2 - x1^3 - x1^4 - x1^5)^2"), max_steps=3)
    res = adapt(parse("(x2 - x1^2 - x1^3 - x1^4 - x1^5)^2"), max_steps=8)
    assert res.status is AdaptStatus.TERMINATED
    assert res.height == 2


def test_height_matches_adapt():
    f = parse("(x2 - x1^2)^2 + x1^5")
    assert height(f) == adapt(f).height


def test_adapt_is_deterministic():
    f = parse("(x2*(1 + x1) - x1^2)^2")
    assert adapt(f, max_steps=8) == adapt(f, max_steps=8)
