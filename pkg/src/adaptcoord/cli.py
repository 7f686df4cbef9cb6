"""Command-line surface.

Subcommands:
  analyze        full pipeline on one polynomial (text, JSON, or SVG)
  decay          numeric decay-rate fit against the exact 1/h
  clusters       root-cluster data as text or JSON
  predict-shear  extreme vertices after shearing a weighted-homogeneous
                 polynomial, without expanding the shear

Exit codes: 0 success, 2 expression or usage errors, 3 precondition
violations, 4 iteration cap exceeded.  ADAPTCOORD_MAX_STEPS overrides the
default shear cap when --max-steps is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .adapt import DEFAULT_MAX_STEPS, adapt
from .clusters import Cluster, ClusterLevel, top_clusters
from .errors import (
    AdaptcoordError,
    IterationCapExceeded,
    PolySyntaxError,
)
from .oscillatory import fit_decay
from .parsing import parse
from .quasihomog import predict_shear_vertices
from .report import AnalysisReport, build_report
from .svgdiagram import render_svg

ENV_MAX_STEPS = "ADAPTCOORD_MAX_STEPS"


def _resolved_max_steps(flag_value: int | None) -> int | None:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(ENV_MAX_STEPS)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"{ENV_MAX_STEPS} must be an integer, got {raw!r}")
    if value < 1:
        raise _UsageError(f"{ENV_MAX_STEPS} must be positive, got {raw!r}")
    return value


class _UsageError(Exception):
    pass


def _pairs(points) -> str:
    return " ".join(f"({j},{k})" for j, k in points)


def _jet_text(jet) -> str:
    if not jet:
        return "(empty)"
    parts = []
    for b, m in jet:
        sign = "-" if b < 0 else "+"
        mag = abs(b)
        coeff = "" if mag == 1 else f"{mag}*"
        parts.append(f"{sign} {coeff}x1^{m}")
    return "x2 -> x2 " + " ".join(parts)


def _print_analysis(rep: AnalysisReport) -> None:
    print(f"input:           {rep.source}")
    print(f"support:         {_pairs(rep.support)}")
    print(f"vertices:        {_pairs(rep.vertices)}")
    print(f"distance:        {rep.distance}")
    print(f"principal face:  {rep.face_kind} through {_pairs(rep.face_points)}")
    print(f"weight:          ({rep.principal_weight[0]}, {rep.principal_weight[1]})")
    flags = (
        f"[edge={'yes' if rep.condition_a else 'no'} "
        f"integer-ratio={'yes' if rep.condition_b else 'no'} "
        f"deep-root={'yes' if rep.condition_c else 'no'}]"
    )
    swap = " (axes swapped)" if rep.check_axis_swapped else ""
    print(f"adapted:         {'yes' if rep.adapted_input else 'no'} {flags}{swap}")
    if rep.witness is not None:
        b, m, mult = rep.witness
        print(f"witness root:    x2 = {b}*x1^{m} (multiplicity {mult})")
    if rep.status == "skipped":
        print("adaptation:      skipped")
    else:
        print(f"status:          {rep.status}")
        print(f"height:          {rep.height}")
        jet_note = " (truncated)" if rep.jet_truncated else ""
        print(f"jet:             {_jet_text(rep.jet)}{jet_note}")
        if rep.adapt_axis_swapped:
            print("                 (after swapping axes)")
        for i, (mult, m, d) in enumerate(rep.steps, start=1):
            print(
                f"step {i}:          exponent {m}, multiplicity {mult}, "
                f"distance before {d}"
            )
        if rep.adapted_poly is not None and rep.status != "skipped":
            print(f"adapted form:    {rep.adapted_poly}")
    if rep.cluster_vertices_match is None:
        print("cluster check:   not applicable")
    else:
        v = "ok" if rep.cluster_vertices_match else "MISMATCH"
        d = "ok" if rep.cluster_distance_match else "MISMATCH"
        print(f"cluster check:   vertices {v}, distance {d}")


def _cmd_analyze(args: argparse.Namespace) -> int:
    f = parse(args.expr)
    rep = build_report(
        f,
        source=args.expr,
        max_steps=_resolved_max_steps(args.max_steps),
        run_adapt=not args.no_adapt,
    )
    if args.svg is not None:
        second = None
        if rep.adapted_poly is not None and (rep.jet or rep.adapt_axis_swapped):
            second = parse(rep.adapted_poly)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(f, second))
    if args.json:
        print(rep.to_json())
    else:
        _print_analysis(rep)
    return 0


def _cmd_decay(args: argparse.Namespace) -> int:
    f = parse(args.expr)
    h = adapt(f, max_steps=_resolved_max_steps(args.max_steps) or DEFAULT_MAX_STEPS).height
    est = fit_decay(
        f,
        args.lambda_min,
        args.lambda_max,
        points=args.points,
        radius=args.radius,
        grid_n=args.grid,
    )
    reference = 1 / h
    if args.json:
        print(
            json.dumps(
                {
                    "lambdas": list(est.lambdas),
                    "magnitudes": list(est.magnitudes),
                    "fitted_exponent": est.fitted_exponent,
                    "fitted_log_power": est.fitted_log_power,
                    "residual": est.residual,
                    "reference_exponent": str(reference),
                    "reference_exponent_float": float(reference),
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        print(
            f"lambda range:    {args.lambda_min:g} .. {args.lambda_max:g} "
            f"({args.points} points)"
        )
        print(f"fitted exponent: {est.fitted_exponent:.4f}")
        print(f"log power:       {est.fitted_log_power}")
        print(f"residual (rms):  {est.residual:.4f}")
        print(f"exact 1/h:       {reference} = {float(reference):.4f}")
    return 0


def _cluster_dict(level: ClusterLevel) -> dict:
    def cluster(c: Cluster) -> dict:
        return {
            "exponent": str(c.exponent),
            "count": c.count,
            "unresolved": c.unresolved,
            "refinements": [
                {
                    "coefficient": str(r.coefficient),
                    "count": r.count,
                    "sub": _cluster_dict(r.sub),
                }
                for r in c.refinements
            ],
        }

    return {
        "nu1": level.nu1,
        "nu2": level.nu2,
        "clusters": [cluster(c) for c in level.clusters],
    }


def _print_clusters(level: ClusterLevel, indent: int = 0) -> None:
    pad = "  " * indent
    print(f"{pad}trivial roots: nu1={level.nu1} nu2={level.nu2}")
    for c in level.clusters:
        extra = f", unresolved {c.unresolved}" if c.unresolved else ""
        print(f"{pad}exponent {c.exponent}: {c.count} root(s){extra}")
        for r in c.refinements:
            print(f"{pad}  coefficient {r.coefficient}: {r.count} root(s)")
            _print_clusters(r.sub, indent + 2)


def _cmd_clusters(args: argparse.Namespace) -> int:
    f = parse(args.expr)
    level = top_clusters(f, depth=args.depth)
    if args.json:
        print(json.dumps(_cluster_dict(level), indent=2, sort_keys=True))
    else:
        _print_clusters(level)
    return 0


def _cmd_predict_shear(args: argparse.Namespace) -> int:
    f = parse(args.expr)
    try:
        b = Fraction(args.coefficient)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"coefficient must be rational, got {args.coefficient!r}")
    first, last = predict_shear_vertices(f, b)
    if args.json:
        print(
            json.dumps(
                {"first": list(first), "last": list(last)},
                indent=2,
                sort_keys=True,
            )
        )
    else:
        print(f"first vertex:    ({first[0]}, {first[1]})")
        print(f"last vertex:     ({last[0]}, {last[1]})")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adaptcoord",
        description=(
            "Exact Newton-polyhedron analysis and adapted coordinate "
            "construction for bivariate rational polynomials."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis of one polynomial")
    p.add_argument("expr", help="polynomial in x1, x2 (aliases x, y)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--svg", metavar="PATH", help="write a Newton-polyhedron SVG")
    p.add_argument(
        "--max-steps",
        type=int,
        metavar="N",
        help=f"shear iteration cap (default {DEFAULT_MAX_STEPS})",
    )
    p.add_argument(
        "--no-adapt", action="store_true", help="skip the shear iteration"
    )
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("decay", help="numeric decay-exponent fit")
    p.add_argument("expr")
    p.add_argument("--lambda-min", type=float, required=True)
    p.add_argument("--lambda-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--radius", type=float, default=0.5)
    p.add_argument("--grid", type=int, default=None, help="per-axis cell count")
    p.add_argument("--max-steps", type=int, default=None, help=argparse.SUPPRESS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decay)

    p = sub.add_parser("clusters", help="Puiseux-root cluster data")
    p.add_argument("expr")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_clusters)

    p = sub.add_parser(
        "predict-shear",
        help="extreme vertices after x2 -> x2 + b*x1^m, computed without expanding",
    )
    p.add_argument("expr", help="weighted-homogeneous polynomial with integer ratio")
    p.add_argument("coefficient", help="shear coefficient b (rational)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_predict_shear)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PolySyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except IterationCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except (AdaptcoordError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
