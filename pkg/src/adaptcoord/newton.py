"""Newton polyhedra of bivariate polynomials and their boundary structure.

The polyhedron of f is the convex hull of the union of translated positive
quadrants (j, k) + R^2_{>=0} over the support.  Its boundary consists of a
vertical half-line, a chain of compact edges with slopes strictly
increasing toward zero, and a horizontal half-line.  The distance is the
coordinate d at which the diagonal t1 = t2 crosses the boundary; the
principal face is the smallest face containing that crossing point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .bipoly import BiPoly, Term, Weight, weighted_part
from .errors import (
    DegenerateFace,
    EmptySupport,
    InternalInvariantViolation,
    ZeroPolynomial,
)


@dataclass(frozen=True, slots=True)
class NewtonPolyhedron:
    """Vertices of the boundary staircase, ordered by increasing first
    coordinate (hence strictly decreasing second coordinate)."""

    vertices: tuple[Term, ...]

    @property
    def edges(self) -> tuple[tuple[Term, Term], ...]:
        return tuple(zip(self.vertices, self.vertices[1:]))

    @property
    def first(self) -> Term:
        return self.vertices[0]

    @property
    def last(self) -> Term:
        return self.vertices[-1]


class FaceKind(Enum):
    VERTEX = "vertex"
    COMPACT_EDGE = "compact-edge"
    HORIZONTAL_HALFLINE = "horizontal-halfline"
    VERTICAL_HALFLINE = "vertical-halfline"


@dataclass(frozen=True, slots=True)
class Face:
    """A face of the boundary.  `points` holds the single vertex, the two
    endpoints of a compact edge, or the anchor vertex of a half-line."""

    kind: FaceKind
    points: tuple[Term, ...]

    @property
    def is_compact_edge(self) -> bool:
        return self.kind is FaceKind.COMPACT_EDGE


def _cross(o: Term, a: Term, b: Term) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def build_polyhedron(points: Iterable[Term]) -> NewtonPolyhedron:
    """Extreme points of conv(union of (j,k) + first quadrant).

    Dominated points (those >= another point componentwise) cannot be
    extreme and are dropped first; a monotone chain over the survivors
    keeps exactly the convex staircase corners.  Collinear interior points
    are not vertices.
    """
    pts = set(points)
    if not pts:
        raise EmptySupport("no support points given")
    # keep minimal points only: (j, k) survives if no other point is <= it
    by_j = sorted(pts)
    minimal: list[Term] = []
    best_k: int | None = None
    for j, k in by_j:
        # by_j is sorted by (j, k); a point is dominated iff some earlier
        # point has k <= current k (its j is automatically <=)
        if best_k is None or k < best_k:
            minimal.append((j, k))
            best_k = k
    hull: list[Term] = []
    for p in minimal:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return NewtonPolyhedron(tuple(hull))


def newton_polyhedron(f: BiPoly) -> NewtonPolyhedron:
    if f.is_zero:
        raise ZeroPolynomial("zero polynomial has no Newton polyhedron")
    return build_polyhedron(f.support)


def face_weight(face: Face) -> Weight:
    """The weight whose unit-level line supports a compact edge."""
    if face.kind is not FaceKind.COMPACT_EDGE:
        raise DegenerateFace(f"face of kind {face.kind.value} has no edge weight")
    (j1, k1), (j2, k2) = face.points
    det = Fraction(j1 * k2 - j2 * k1)
    if det == 0:
        raise InternalInvariantViolation("edge endpoints collinear with origin")
    return Weight((k2 - k1) / det, (j1 - j2) / det)


def edge_weight(a: Term, b: Term) -> Weight:
    return face_weight(Face(FaceKind.COMPACT_EDGE, (a, b)))


def distance(np_: NewtonPolyhedron) -> Fraction:
    """Coordinate of the boundary crossing with the diagonal t1 = t2.

    The polyhedron is the intersection of the half-planes t1 >= A_first,
    t2 >= B_last, and one half-plane per compact edge, so the crossing
    coordinate is the largest of the per-face thresholds.
    """
    a_first = Fraction(np_.first[0])
    b_last = Fraction(np_.last[1])
    best = max(a_first, b_last)
    for a, b in np_.edges:
        w = edge_weight(a, b)
        best = max(best, 1 / (w.k1 + w.k2))
    return best


def principal_face(np_: NewtonPolyhedron) -> Face:
    """Smallest boundary face containing the diagonal crossing point."""
    d = distance(np_)
    point = (d, d)
    for v in np_.vertices:
        if Fraction(v[0]) == d and Fraction(v[1]) == d:
            return Face(FaceKind.VERTEX, (v,))
    for a, b in np_.edges:
        w = edge_weight(a, b)
        if w.k1 * d + w.k2 * d == 1 and Fraction(a[0]) < d < Fraction(b[0]):
            return Face(FaceKind.COMPACT_EDGE, (a, b))
    if d == Fraction(np_.last[1]) and d > Fraction(np_.last[0]):
        return Face(FaceKind.HORIZONTAL_HALFLINE, (np_.last,))
    if d == Fraction(np_.first[0]) and d > Fraction(np_.first[1]):
        return Face(FaceKind.VERTICAL_HALFLINE, (np_.first,))
    raise InternalInvariantViolation(f"diagonal point {point} matched no face")


def principal_face_weight(face: Face, d: Fraction) -> Weight:
    """Weight convention for each face kind.

    Compact edges carry their supporting-line weight; a vertex face on the
    diagonal gets the symmetric weight (1/(2d), 1/(2d)); half-lines get a
    zero component in the unbounded direction.
    """
    if face.kind is FaceKind.COMPACT_EDGE:
        return face_weight(face)
    if face.kind is FaceKind.VERTEX:
        return Weight(Fraction(1, 1) / (2 * d), Fraction(1, 1) / (2 * d))
    if face.kind is FaceKind.HORIZONTAL_HALFLINE:
        return Weight(Fraction(0), Fraction(1, 1) / d)
    return Weight(Fraction(1, 1) / d, Fraction(0))


def principal_part(f: BiPoly) -> BiPoly:
    """Terms of f lying on the principal face of its polyhedron."""
    np_ = newton_polyhedron(f)
    face = principal_face(np_)
    if face.kind is FaceKind.VERTEX:
        (j, k) = face.points[0]
        return BiPoly.monomial(j, k, f.coeff(j, k))
    if face.kind is FaceKind.COMPACT_EDGE:
        return weighted_part(f, face_weight(face), 1)
    if face.kind is FaceKind.HORIZONTAL_HALFLINE:
        k0 = face.points[0][1]
        return BiPoly({(j, k): c for (j, k), c in f.terms().items() if k == k0})
    j0 = face.points[0][0]
    return BiPoly({(j, k): c for (j, k), c in f.terms().items() if j == j0})
