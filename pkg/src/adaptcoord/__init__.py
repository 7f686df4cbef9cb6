"""Exact Newton-polyhedron geometry and adapted coordinates for bivariate
rational polynomials.

The central objects: the Newton polyhedron of f with its distance and
principal face; the adaptedness verdict for the given coordinates; the
shear iteration that raises the distance to the height, with exact
certification when it provably never terminates; root-cluster data as an
independent oracle for the hull; and a numeric decay-rate check for the
oscillatory integral with phase f.
"""

from .adapt import (
    DEFAULT_MAX_STEPS,
    AdaptednessReport,
    AdaptResult,
    AdaptStatus,
    AdaptStep,
    PrincipalRootWitness,
    RootJet,
    adapt,
    check_adapted,
    height,
    shear_step,
)
from .bipoly import (
    BiPoly,
    ShearAxis,
    ShearChange,
    Weight,
    apply_jet,
    apply_shear,
    scale_axes,
    squarefree_part_x2,
    swap_axes,
    weighted_order,
    weighted_part,
)
from .clusters import (
    Cluster,
    ClusterLevel,
    Refinement,
    distance_from_clusters,
    edge_principal_part_from_clusters,
    top_clusters,
    vertices_from_clusters,
)
from .errors import (
    AdaptcoordError,
    AlreadyAdapted,
    AxesNotNormalized,
    DegenerateFace,
    DegenerateInX2,
    EmptySupport,
    GridTooCoarse,
    InternalInvariantViolation,
    IterationCapExceeded,
    MonomialInput,
    NonIntegerExponent,
    NonIntegerVertex,
    NonvanishingGradient,
    NotFiniteType,
    NotQuasiHomogeneous,
    NotSquarefree,
    PolySyntaxError,
    RequiresAlgebraicExtension,
    UnknownVariable,
    WrongHomogeneity,
    ZeroPolynomial,
)
from .newton import (
    Face,
    FaceKind,
    NewtonPolyhedron,
    build_polyhedron,
    distance,
    edge_weight,
    face_weight,
    newton_polyhedron,
    principal_face,
    principal_face_weight,
    principal_part,
)
from .oscillatory import (
    DecayEstimate,
    estimate_integral,
    fit_decay,
)
from .parsing import parse
from .quasihomog import (
    QuasiHomogData,
    RealRootDescriptor,
    WeightDetection,
    analyze,
    circle_vanishing_order,
    detect_weight,
    predict_shear_vertices,
    quasihomogeneous_height,
    root_structure,
)
from .report import AnalysisReport, build_report, report_from_dict
from .svgdiagram import render_svg
from .unipoly import UniPoly

__version__ = "0.1.0"

__all__ = [
    "AdaptcoordError",
    "AdaptednessReport",
    "AdaptResult",
    "AdaptStatus",
    "AdaptStep",
    "AlreadyAdapted",
    "AnalysisReport",
    "AxesNotNormalized",
    "BiPoly",
    "Cluster",
    "ClusterLevel",
    "DecayEstimate",
    "DEFAULT_MAX_STEPS",
    "DegenerateFace",
    "DegenerateInX2",
    "EmptySupport",
    "Face",
    "FaceKind",
    "GridTooCoarse",
    "InternalInvariantViolation",
    "IterationCapExceeded",
    "MonomialInput",
    "NewtonPolyhedron",
    "NonIntegerExponent",
    "NonIntegerVertex",
    "NonvanishingGradient",
    "NotFiniteType",
    "NotQuasiHomogeneous",
    "NotSquarefree",
    "PolySyntaxError",
    "PrincipalRootWitness",
    "QuasiHomogData",
    "RealRootDescriptor",
    "Refinement",
    "RequiresAlgebraicExtension",
    "RootJet",
    "ShearAxis",
    "ShearChange",
    "UniPoly",
    "UnknownVariable",
    "Weight",
    "WeightDetection",
    "WrongHomogeneity",
    "ZeroPolynomial",
    "adapt",
    "analyze",
    "apply_jet",
    "apply_shear",
    "build_polyhedron",
    "build_report",
    "check_adapted",
    "circle_vanishing_order",
    "detect_weight",
    "distance",
    "distance_from_clusters",
    "edge_principal_part_from_clusters",
    "edge_weight",
    "estimate_integral",
    "face_weight",
    "fit_decay",
    "height",
    "newton_polyhedron",
    "parse",
    "predict_shear_vertices",
    "principal_face",
    "principal_face_weight",
    "principal_part",
    "quasihomogeneous_height",
    "render_svg",
    "report_from_dict",
    "root_structure",
    "scale_axes",
    "shear_step",
    "squarefree_part_x2",
    "swap_axes",
    "top_clusters",
    "vertices_from_clusters",
    "weighted_order",
    "weighted_part",
]
