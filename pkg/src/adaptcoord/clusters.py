"""Newton-diagram data recomputed from root clusters.

Over the Puiseux field, a polynomial with f(0,0) = 0 and positive x2-degree
factors as

    f = c * x1^nu1 * x2^nu2 * prod (x2 - r_i(x1)),

where each nontrivial root r_i has a positive rational leading exponent.
Grouping roots by that exponent gives the depth-1 clusters: one cluster per
compact edge of the Newton polygon, with exponent the reduced inverse slope
a_l and count the x2-drop N_l along the edge.  The vertices, the distance,
and the edge principal parts are all recoverable from (nu1, nu2, clusters)
alone, which makes this module an independent oracle for the hull geometry.

Deeper levels group roots by leading coefficient as well.  Only branches
with integer exponent and rational leading coefficient are followed (shear
by the branch term and recurse); the rest are tallied per cluster in
`unresolved`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bipoly import BiPoly, ShearAxis, ShearChange, apply_shear
from .errors import (
    DegenerateInX2,
    InternalInvariantViolation,
    NonIntegerVertex,
    RequiresAlgebraicExtension,
    ZeroPolynomial,
)
from .newton import build_polyhedron
from .quasihomog import root_structure
from .unipoly import split_rational_roots


@dataclass(frozen=True, slots=True)
class Refinement:
    """Continuation data for the branches starting coefficient * x1^exponent.

    `count` is the number of roots (with multiplicity) whose expansions
    begin with that term; `sub.nu2` of them stop there exactly, the rest
    reappear in `sub.clusters` with strictly larger exponents.
    """

    coefficient: Fraction
    count: int
    sub: "ClusterLevel"


@dataclass(frozen=True, slots=True)
class Cluster:
    """Roots sharing the leading exponent `exponent`, `count` of them with
    multiplicity.  `unresolved` tallies branches skipped by refinement
    because their leading terms need an algebraic extension (irrational
    coefficient, or a fractional exponent); it is 0 when refinement was
    not requested."""

    exponent: Fraction
    count: int
    refinements: tuple[Refinement, ...] = ()
    unresolved: int = 0


@dataclass(frozen=True, slots=True)
class ClusterLevel:
    nu1: int
    nu2: int
    clusters: tuple[Cluster, ...] = field(default=())

    @property
    def total_roots(self) -> int:
        return self.nu2 + sum(c.count for c in self.clusters)


def _validate(cl: ClusterLevel) -> None:
    if cl.nu1 < 0 or cl.nu2 < 0:
        raise ValueError("trivial-root counts must be non-negative")
    prev: Fraction | None = None
    for c in cl.clusters:
        if c.exponent <= 0 or c.count < 1:
            raise ValueError("clusters need positive exponents and counts")
        if prev is not None and c.exponent <= prev:
            raise ValueError("cluster exponents must increase strictly")
        prev = c.exponent


def _refine_edge(
    f: BiPoly,
    edge_part: BiPoly,
    exponent: Fraction,
    count: int,
    depth: int,
    require_complete: bool,
) -> tuple[tuple[Refinement, ...], int]:
    """Split one edge's branches by leading coefficient, recursing on the
    rational ones.  Returns (refinements, unresolved count)."""
    if exponent.denominator != 1:
        # fractional leading exponent: every branch lives in a Puiseux
        # extension x1^(1/q), outside rational-shear reach
        return (), count
    a = int(exponent)
    _, _, _, q, _, _, u = root_structure(edge_part)
    if q != 1:
        raise InternalInvariantViolation("integer inverse slope with q > 1")
    rational, _ = split_rational_roots(u)
    refinements: list[Refinement] = []
    resolved = 0
    for value, mult in rational:
        g = apply_shear(f, ShearChange(ShearAxis.X2, value, a))
        sub_full = top_clusters(g, depth=depth - 1, require_complete=require_complete)
        continuations = tuple(
            c for c in sub_full.clusters if c.exponent > exponent
        )
        sub = ClusterLevel(sub_full.nu1, sub_full.nu2, continuations)
        if sub.total_roots != mult:
            raise InternalInvariantViolation("branch count lost under shear")
        refinements.append(Refinement(coefficient=value, count=mult, sub=sub))
        resolved += mult
    return tuple(refinements), count - resolved


def top_clusters(
    f: BiPoly, depth: int = 1, require_complete: bool = False
) -> ClusterLevel:
    """Group the Puiseux roots of f by leading exponent.

    Depth 1 reads the compact edges of the Newton polygon only: exponents
    are the reduced inverse slopes, counts the x2-drops, and no root
    arithmetic happens at all.  With depth >= 2, branches with integer
    exponent and rational leading coefficient are refined recursively;
    everything else is counted in the clusters' `unresolved` fields, and
    with require_complete=True such leftovers raise
    RequiresAlgebraicExtension instead.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if f.is_zero:
        raise ZeroPolynomial("cluster data needs a nonzero polynomial")
    if f.coeff(0, 0) != 0:
        raise ValueError("cluster data needs f(0,0) = 0")
    if f.x2_degree < 1:
        raise DegenerateInX2("cluster data needs positive degree in x2")
    hull = build_polyhedron(f.support)
    verts = hull.vertices
    nu1 = verts[0][0]
    nu2 = verts[-1][1]
    clusters: list[Cluster] = []
    for (j0, k0), (j1, k1) in hull.edges:
        exponent = Fraction(j1 - j0, k0 - k1)
        count = k0 - k1
        refinements: tuple[Refinement, ...] = ()
        unresolved = 0
        if depth >= 2:
            line_level = j1 + exponent * k1
            edge_part = BiPoly(
                {
                    (j, k): c
                    for (j, k), c in f.terms().items()
                    if j + exponent * k == line_level
                }
            )
            refinements, unresolved = _refine_edge(
                f, edge_part, exponent, count, depth, require_complete
            )
            if unresolved and require_complete:
                raise RequiresAlgebraicExtension(
                    f"{unresolved} branch(es) with exponent {exponent} need "
                    "algebraic coefficients"
                )
        clusters.append(Cluster(exponent, count, refinements, unresolved))
    return ClusterLevel(nu1=nu1, nu2=nu2, clusters=tuple(clusters))


def vertices_from_clusters(cl: ClusterLevel) -> list[tuple[int, int]]:
    """Reconstruct the Newton-polygon vertices from cluster data alone.

    A_l = nu1 + sum_{mu <= l} a_mu * N_mu and B_l = B_0 - sum_{mu <= l}
    N_mu, starting from (nu1, nu2 + total count).  The A_l must come out
    integral; NonIntegerVertex flags inconsistent data.
    """
    _validate(cl)
    a = Fraction(cl.nu1)
    b = cl.total_roots
    out = [(cl.nu1, b)]
    for c in cl.clusters:
        a += c.exponent * c.count
        b -= c.count
        if a.denominator != 1:
            raise NonIntegerVertex(f"vertex abscissa {a} is not an integer")
        out.append((int(a), b))
    return out


def distance_from_clusters(cl: ClusterLevel) -> Fraction:
    """Newton distance from cluster data: the largest of A_0, B_n, and the
    bisectrix intercepts (A_l + a_l B_l) / (1 + a_l) of the edge lines."""
    verts = vertices_from_clusters(cl)
    best = max(Fraction(verts[0][0]), Fraction(verts[-1][1]))
    for c, (A, B) in zip(cl.clusters, verts[1:]):
        t = (A + c.exponent * B) / (1 + c.exponent)
        if t > best:
            best = t
    return best


def edge_principal_part_from_clusters(f: BiPoly, l: int) -> BiPoly:
    """Terms of f on the supporting line of the l-th edge (1-based).

    The line is t1 + a_l t2 = A_l + a_l B_l with vertex data taken from
    the cluster reconstruction; the result carries the prefactor
    x1^{A_{l-1}} x2^{B_l} visible in its extreme terms.
    """
    cl = top_clusters(f)
    if l < 1 or l > len(cl.clusters):
        raise IndexError(f"no compact edge with index {l}")
    verts = vertices_from_clusters(cl)
    a = cl.clusters[l - 1].exponent
    A, B = verts[l]
    line_level = A + a * B
    return BiPoly(
        {
            (j, k): c
            for (j, k), c in f.terms().items()
            if j + a * k == line_level
        }
    )
