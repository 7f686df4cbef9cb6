"""Aggregate analysis results and their JSON form.

An AnalysisReport captures one full pipeline run: hull geometry, the
adaptedness verdict on the input coordinates, the shear iteration's
outcome, and a cross-check of the hull data against the cluster
reconstruction.  All rational values serialize as exact "p/q" strings so
reports round-trip losslessly; the schema is documented in
docs/report_schema.md.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .adapt import AdaptResult, adapt, check_adapted
from .bipoly import BiPoly
from .clusters import distance_from_clusters, top_clusters, vertices_from_clusters
from .errors import DegenerateInX2
from .newton import distance, edge_weight, newton_polyhedron, principal_face

IntPair = tuple[int, int]
FracPair = tuple[Fraction, Fraction]


@dataclass(frozen=True, slots=True)
class AnalysisReport:
    source: str
    support: tuple[IntPair, ...]
    vertices: tuple[IntPair, ...]
    distance: Fraction
    face_kind: str
    face_points: tuple[IntPair, ...]
    principal_weight: FracPair
    edge_weights: tuple[FracPair, ...]
    adapted_input: bool
    condition_a: bool
    condition_b: bool
    condition_c: bool
    check_axis_swapped: bool
    witness: tuple[Fraction, int, int] | None
    status: str
    height: Fraction | None
    jet: tuple[tuple[Fraction, int], ...]
    jet_truncated: bool
    adapt_axis_swapped: bool
    steps: tuple[tuple[int, int, Fraction], ...]
    adapted_poly: str | None
    cluster_vertices_match: bool | None
    cluster_distance_match: bool | None

    def to_dict(self) -> dict:
        witness = None
        if self.witness is not None:
            b, m, mult = self.witness
            witness = {
                "coefficient": str(b),
                "exponent": m,
                "multiplicity": mult,
            }
        cluster_check = None
        if self.cluster_vertices_match is not None:
            cluster_check = {
                "vertices_match": self.cluster_vertices_match,
                "distance_match": self.cluster_distance_match,
            }
        return {
            "input": self.source,
            "support": [list(p) for p in self.support],
            "vertices": [list(p) for p in self.vertices],
            "distance": str(self.distance),
            "principal_face": {
                "kind": self.face_kind,
                "points": [list(p) for p in self.face_points],
            },
            "principal_weight": [str(w) for w in self.principal_weight],
            "edge_weights": [[str(a), str(b)] for a, b in self.edge_weights],
            "adapted_input": self.adapted_input,
            "adaptedness": {
                "condition_a": self.condition_a,
                "condition_b": self.condition_b,
                "condition_c": self.condition_c,
                "axis_swapped": self.check_axis_swapped,
                "witness": witness,
            },
            "status": self.status,
            "height": None if self.height is None else str(self.height),
            "jet": [[str(b), m] for b, m in self.jet],
            "jet_truncated": self.jet_truncated,
            "adapt_axis_swapped": self.adapt_axis_swapped,
            "steps": [
                {"multiplicity": n, "exponent": m, "distance": str(d)}
                for n, m, d in self.steps
            ],
            "adapted_poly": self.adapted_poly,
            "cluster_check": cluster_check,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def report_from_dict(data: dict) -> AnalysisReport:
    """Inverse of AnalysisReport.to_dict, exact on all rational fields."""
    ad = data["adaptedness"]
    witness = None
    if ad["witness"] is not None:
        witness = (
            Fraction(ad["witness"]["coefficient"]),
            int(ad["witness"]["exponent"]),
            int(ad["witness"]["multiplicity"]),
        )
    cluster = data["cluster_check"]
    height = data["height"]
    pw = data["principal_weight"]
    return AnalysisReport(
        source=data["input"],
        support=tuple((int(j), int(k)) for j, k in data["support"]),
        vertices=tuple((int(j), int(k)) for j, k in data["vertices"]),
        distance=Fraction(data["distance"]),
        face_kind=data["principal_face"]["kind"],
        face_points=tuple(
            (int(j), int(k)) for j, k in data["principal_face"]["points"]
        ),
        principal_weight=(Fraction(pw[0]), Fraction(pw[1])),
        edge_weights=tuple(
            (Fraction(a), Fraction(b)) for a, b in data["edge_weights"]
        ),
        adapted_input=data["adapted_input"],
        condition_a=ad["condition_a"],
        condition_b=ad["condition_b"],
        condition_c=ad["condition_c"],
        check_axis_swapped=ad["axis_swapped"],
        witness=witness,
        status=data["status"],
        height=None if height is None else Fraction(height),
        jet=tuple((Fraction(b), int(m)) for b, m in data["jet"]),
        jet_truncated=data["jet_truncated"],
        adapt_axis_swapped=data["adapt_axis_swapped"],
        steps=tuple(
            (int(s["multiplicity"]), int(s["exponent"]), Fraction(s["distance"]))
            for s in data["steps"]
        ),
        adapted_poly=data["adapted_poly"],
        cluster_vertices_match=None if cluster is None else cluster["vertices_match"],
        cluster_distance_match=None if cluster is None else cluster["distance_match"],
    )


def _cluster_check(f: BiPoly, verts: tuple[IntPair, ...], d: Fraction):
    try:
        cl = top_clusters(f)
    except DegenerateInX2:
        return None, None
    return (
        tuple(vertices_from_clusters(cl)) == verts,
        distance_from_clusters(cl) == d,
    )


def build_report(
    f: BiPoly,
    source: str | None = None,
    max_steps: int | None = None,
    run_adapt: bool = True,
) -> AnalysisReport:
    """Run the full pipeline on f and assemble the report.

    With run_adapt=False the shear iteration is skipped and the report
    carries status "skipped" with no height.  IterationCapExceeded from
    the iteration propagates to the caller.
    """
    np_ = newton_polyhedron(f)
    verts = tuple(np_.vertices)
    d = distance(np_)
    face = principal_face(np_)
    rep = check_adapted(f)
    witness = None
    if rep.witness is not None:
        witness = (
            rep.witness.coefficient,
            rep.witness.exponent,
            rep.witness.multiplicity,
        )
    result: AdaptResult | None = None
    if run_adapt:
        if max_steps is None:
            result = adapt(f)
        else:
            result = adapt(f, max_steps=max_steps)
    vmatch, dmatch = _cluster_check(f, verts, d)
    return AnalysisReport(
        source=str(f) if source is None else source,
        support=tuple(sorted(f.support)),
        vertices=verts,
        distance=d,
        face_kind=face.kind.value,
        face_points=tuple(face.points),
        principal_weight=(rep.weight.k1, rep.weight.k2),
        edge_weights=tuple(
            (w.k1, w.k2) for w in (edge_weight(a, b) for a, b in np_.edges)
        ),
        adapted_input=rep.adapted,
        condition_a=rep.condition_a,
        condition_b=rep.condition_b,
        condition_c=rep.condition_c,
        check_axis_swapped=rep.axis_swapped,
        witness=witness,
        status="skipped" if result is None else result.status.value,
        height=None if result is None else result.height,
        jet=() if result is None else result.jet.terms,
        jet_truncated=False if result is None else result.jet.truncated,
        adapt_axis_swapped=False if result is None else result.axis_swapped,
        steps=()
        if result is None
        else tuple((s.multiplicity, s.exponent, s.distance) for s in result.steps),
        adapted_poly=None if result is None else str(result.final_poly),
        cluster_vertices_match=vmatch,
        cluster_distance_match=dmatch,
    )
