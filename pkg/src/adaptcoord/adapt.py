"""Adaptedness of coordinates and the distance-raising shear iteration.

Coordinates are adapted to f when no local coordinate change can increase
the Newton distance.  For analytic f this fails exactly when three
conditions hold at once:

  (a) the principal face is a compact edge,
  (b) after normalizing k1 <= k2 the weight ratio m = k2/k1 is an integer,
  (c) the principal part vanishes on the unit circle to an order larger
      than the distance, attained away from the coordinate axes.

When they do hold, the offending zero curve is tangent to x2 = b*x1^m for
a rational b, and shearing x2 -> x2 + b*x1^m strictly increases the
distance.  Iterating this step either terminates in adapted coordinates or
tracks an infinite power-series root of some fixed multiplicity N; in the
latter case the height equals N.

Non-termination is certified exactly, not guessed: once the step
multiplicities stabilize at N, the squarefree factor F of f with
multiplicity N must carry the root being tracked.  A polynomial root of F
through the origin has x1-degree at most a bound computable from the
coefficient degrees of F, so as soon as the next jet exponent provably
exceeds that bound while F evaluated along the jet stays nonzero, the
tracked root cannot be a polynomial and the iteration can never stop.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .bipoly import (
    BiPoly,
    ShearAxis,
    ShearChange,
    Weight,
    apply_jet,
    apply_shear,
    squarefree_part_x2,
    swap_axes,
)
from .errors import (
    AlreadyAdapted,
    InternalInvariantViolation,
    IterationCapExceeded,
    NonvanishingGradient,
    NotFiniteType,
)
from .newton import (
    Face,
    FaceKind,
    distance,
    face_weight,
    newton_polyhedron,
    principal_face,
    principal_face_weight,
    principal_part,
)
from .quasihomog import analyze

DEFAULT_MAX_STEPS = 64
STABILIZATION_WINDOW = 3


@dataclass(frozen=True, slots=True)
class PrincipalRootWitness:
    """The root driving a non-adapted verdict: x2 = coefficient * x1^exponent
    annihilates the principal part to order `multiplicity`."""

    coefficient: Fraction
    exponent: int
    multiplicity: int


@dataclass(frozen=True, slots=True)
class AdaptednessReport:
    adapted: bool
    condition_a: bool
    condition_b: bool
    condition_c: bool
    axis_swapped: bool
    witness: PrincipalRootWitness | None
    distance: Fraction
    face: Face
    weight: Weight


@dataclass(frozen=True, slots=True)
class RootJet:
    """Terms (b_l, m_l) of the shear chain y2 = x2 - sum b_l * x1^{m_l};
    exponents strictly increasing.  `truncated` marks a jet cut off at the
    step cap rather than completed."""

    terms: tuple[tuple[Fraction, int], ...]
    truncated: bool


@dataclass(frozen=True, slots=True)
class AdaptStep:
    """One shear step: the multiplicity of the principal root used, the
    x1-exponent of the shear, and the distance before shearing."""

    multiplicity: int
    exponent: int
    distance: Fraction


class AdaptStatus(Enum):
    TERMINATED = "terminated"
    NONTERMINATING_CERTIFIED = "nonterminating-certified"


@dataclass(frozen=True, slots=True)
class AdaptResult:
    jet: RootJet
    axis_swapped: bool
    height: Fraction
    final_poly: BiPoly
    steps: tuple[AdaptStep, ...]
    status: AdaptStatus


def _require_input(f: BiPoly) -> None:
    if f.is_zero:
        raise NotFiniteType("the zero polynomial has no finite-type analysis")
    if f.origin_order < 2:
        raise NonvanishingGradient(
            "input must vanish to order >= 2 at the origin"
        )


def check_adapted(f: BiPoly) -> AdaptednessReport:
    """Decide adaptedness of the current coordinates.

    Axes are normalized internally so k1 <= k2; when that requires a swap
    the report says so and the witness refers to the swapped orientation.
    """
    _require_input(f)
    np_ = newton_polyhedron(f)
    d = distance(np_)
    face = principal_face(np_)
    swapped = False
    if face.kind is FaceKind.VERTICAL_HALFLINE:
        swapped = True
    elif face.is_compact_edge:
        w = face_weight(face)
        if w.k1 > w.k2:
            swapped = True
    g = swap_axes(f) if swapped else f
    if swapped:
        np_ = newton_polyhedron(g)
        face = principal_face(np_)
        if distance(np_) != d:
            raise InternalInvariantViolation("distance changed under axis swap")
    weight = principal_face_weight(face, d)
    if not face.is_compact_edge:
        # vertex faces carry the symmetric weight (ratio 1, condition (b)
        # vacuously true); half-line faces have k1 = 0 (ratio infinite)
        condition_b = face.kind is FaceKind.VERTEX
        return AdaptednessReport(
            adapted=True,
            condition_a=False,
            condition_b=condition_b,
            condition_c=False,
            axis_swapped=swapped,
            witness=None,
            distance=d,
            face=face,
            weight=weight,
        )
    ratio = weight.ratio
    condition_b = ratio.denominator == 1
    data = analyze(principal_part(g))
    max_real = data.max_real_multiplicity
    condition_c = Fraction(max_real) > d
    witness = None
    if condition_b and condition_c:
        if data.principal_root is None:
            raise InternalInvariantViolation(
                "conditions met but no principal root extracted"
            )
        b, m = data.principal_root
        if m != int(ratio):
            raise InternalInvariantViolation("witness exponent disagrees with weight")
        witness = PrincipalRootWitness(
            coefficient=b, exponent=m, multiplicity=max_real
        )
    adapted = not (condition_b and condition_c)
    return AdaptednessReport(
        adapted=adapted,
        condition_a=True,
        condition_b=condition_b,
        condition_c=condition_c,
        axis_swapped=swapped,
        witness=witness,
        distance=d,
        face=face,
        weight=weight,
    )


def shear_step(f: BiPoly) -> tuple[ShearChange, BiPoly]:
    """One distance-raising shear by the principal root of f's principal part.

    Raises AlreadyAdapted when no such step exists.  The returned shear is
    taken in the axis-normalized orientation: when check_adapted(f) reports
    axis_swapped, it applies to swap_axes(f).
    """
    report = check_adapted(f)
    if report.adapted:
        raise AlreadyAdapted("coordinates are already adapted")
    assert report.witness is not None
    g = swap_axes(f) if report.axis_swapped else f
    shear = ShearChange(
        ShearAxis.X2, report.witness.coefficient, report.witness.exponent
    )
    g_next = apply_shear(g, shear)
    if distance(newton_polyhedron(g_next)) <= report.distance:
        raise InternalInvariantViolation("shear failed to increase the distance")
    return shear, g_next


def _polynomial_root_degree_bound(F: BiPoly) -> int:
    """Upper bound on deg(sigma) over polynomial roots sigma(x1) of F.

    If F = sum a_i(x1) x2^i with top index B, a root of x1-degree t makes
    the top term contribute degree deg(a_B) + B*t, which must be matched by
    some lower term: t <= (deg a_i - deg a_B) / (B - i).
    """
    rows = F.x2_coefficients()
    top = len(rows) - 1
    deg_top = rows[top].degree
    bound = 0
    for i in range(top):
        if rows[i].is_zero:
            continue
        t = Fraction(rows[i].degree - deg_top, top - i)
        if t > bound:
            bound = int(t)  # floor for positive t
    return bound


def _certify_nonterminating(
    start: BiPoly,
    jet: list[tuple[Fraction, int]],
    steps: list[AdaptStep],
    window: int,
) -> int | None:
    """Return the certified multiplicity N, or None if no certificate holds.

    `start` is the polynomial the iteration began from (axes already
    normalized); `jet` the shears applied so far.  The certificate checks
    that the squarefree factor of multiplicity N carries a simple series
    root extending the jet, and that the root provably is not a polynomial.
    """
    if len(steps) < window:
        return None
    tail = steps[-window:]
    N = tail[-1].multiplicity
    if any(s.multiplicity != N for s in tail):
        return None
    if N < 2:
        return None
    _, factors = squarefree_part_x2(start)
    matching = [F for F, j in factors if j == N]
    if not matching:
        return None
    F = matching[0]
    G = apply_jet(F, jet)
    rows = G.x2_coefficients()
    if len(rows) < 2 or rows[0].is_zero or rows[1].is_zero:
        return None
    e0 = rows[0].trailing_order
    e1 = rows[1].trailing_order
    m_next = e0 - e1
    m_last = jet[-1][1]
    if m_next <= m_last:
        return None
    # the (i=0, i=1) edge of the series Newton polygon must dominate, so
    # the continuation is the unique root of maximal order and is simple
    for i in range(2, len(rows)):
        if rows[i].is_zero:
            continue
        if rows[i].trailing_order + i * m_next <= e0:
            return None
    if m_next <= _polynomial_root_degree_bound(F):
        return None
    if Fraction(N) <= steps[-1].distance:
        raise InternalInvariantViolation("stabilized multiplicity below distance")
    return N


def adapt(f: BiPoly, max_steps: int = DEFAULT_MAX_STEPS) -> AdaptResult:
    """Construct an adapted coordinate system by iterated shears.

    Runs principal-root shears until the coordinates are adapted, in which
    case the height is the final distance, or until `max_steps` shears have
    been applied, in which case a non-termination certificate is attempted
    (the height is then the stabilized multiplicity and the jet is marked
    truncated).  Raises IterationCapExceeded when the cap is hit and no
    certificate holds.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    _require_input(f)
    report = check_adapted(f)
    if report.adapted:
        return AdaptResult(
            jet=RootJet((), truncated=False),
            axis_swapped=False,
            height=report.distance,
            final_poly=f,
            steps=(),
            status=AdaptStatus.TERMINATED,
        )
    swapped = report.axis_swapped
    start = swap_axes(f) if swapped else f
    g = start
    jet: list[tuple[Fraction, int]] = []
    steps: list[AdaptStep] = []
    for k in range(max_steps + 1):
        rep = check_adapted(g)
        if rep.adapted:
            return AdaptResult(
                jet=RootJet(tuple(jet), truncated=False),
                axis_swapped=swapped,
                height=rep.distance,
                final_poly=g,
                steps=tuple(steps),
                status=AdaptStatus.TERMINATED,
            )
        if k == max_steps:
            break
        if rep.axis_swapped:
            raise InternalInvariantViolation(
                "axis orientation flipped after the first shear"
            )
        assert rep.witness is not None
        w = rep.witness
        if jet and w.exponent <= jet[-1][1]:
            raise InternalInvariantViolation("jet exponents failed to increase")
        if steps and rep.distance <= steps[-1].distance:
            raise InternalInvariantViolation("shear failed to increase the distance")
        if steps and w.multiplicity > steps[-1].multiplicity:
            raise InternalInvariantViolation("root multiplicity increased along the jet")
        steps.append(AdaptStep(w.multiplicity, w.exponent, rep.distance))
        jet.append((w.coefficient, w.exponent))
        g = apply_shear(g, ShearChange(ShearAxis.X2, w.coefficient, w.exponent))
    certified = _certify_nonterminating(start, jet, steps, STABILIZATION_WINDOW)
    if certified is None:
        raise IterationCapExceeded(
            f"no adapted system within {max_steps} shears and no "
            "non-termination certificate; retry with a larger max_steps"
        )
    return AdaptResult(
        jet=RootJet(tuple(jet), truncated=True),
        axis_swapped=swapped,
        height=Fraction(certified),
        final_poly=g,
        steps=tuple(steps),
        status=AdaptStatus.NONTERMINATING_CERTIFIED,
    )


def height(f: BiPoly, max_steps: int = DEFAULT_MAX_STEPS) -> Fraction:
    """The supremum of the Newton distance over all local coordinates."""
    return adapt(f, max_steps=max_steps).height
