#!/usr/bin/env python3
"""Survey heights over a reproducible random corpus.

Draws random bivariate polynomials vanishing to order >= 2 at the origin,
runs the full analysis on each, and tabulates distance, height, principal
face kind, adaptedness, and shear-iteration status.

    python3 scripts/height_survey.py
    python3 scripts/height_survey.py --count 2000 --seed 7 --json
    python3 scripts/height_survey.py --show-nonadapted
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from adaptcoord import (
    BiPoly,
    IterationCapExceeded,
    adapt,
    check_adapted,
    distance,
    newton_polyhedron,
    principal_face,
)

DEFAULT_SEED = 20260822


@dataclass(frozen=True)
class SurveyConfig:
    count: int = 500
    seed: int = DEFAULT_SEED
    max_terms: int = 8
    max_exponent: int = 10
    coeff_bound: int = 5
    max_steps: int = 64
    emit_json: bool = False
    show_nonadapted: bool = False


def random_corpus(cfg: SurveyConfig) -> list[BiPoly]:
    """Random polynomials with x2-dependence and origin order >= 2."""
    rng = Random(cfg.seed)
    out: list[BiPoly] = []
    while len(out) < cfg.count:
        terms: dict[tuple[int, int], Fraction] = {}
        for _ in range(rng.randint(2, cfg.max_terms)):
            j = rng.randint(0, cfg.max_exponent)
            k = rng.randint(0, cfg.max_exponent - j)
            if j + k < 2:
                continue
            c = rng.randint(-cfg.coeff_bound, cfg.coeff_bound)
            if c == 0:
                continue
            key = (j, k)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(c)
        f = BiPoly(terms)
        if f.is_zero or f.x2_degree < 1 or f.origin_order < 2:
            continue
        out.append(f)
    return out


def survey_one(f: BiPoly, cfg: SurveyConfig) -> dict:
    np_ = newton_polyhedron(f)
    d = distance(np_)
    face = principal_face(np_)
    rep = check_adapted(f)
    row = {
        "input": str(f),
        "terms": len(f.support),
        "distance": str(d),
        "face_kind": face.kind.name.lower(),
        "adapted": rep.adapted,
    }
    try:
        res = adapt(f, max_steps=cfg.max_steps)
        row["height"] = str(res.height)
        row["height_float"] = float(res.height)
        row["status"] = res.status.value
        row["jet_length"] = len(res.jet.terms)
    except IterationCapExceeded:
        row["height"] = None
        row["height_float"] = None
        row["status"] = "cap-exceeded"
        row["jet_length"] = None
    return row


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--max-steps", type=int, default=64)
    ap.add_argument("--json", action="store_true")
    ap.add_argument(
        "--show-nonadapted",
        action="store_true",
        help="list every polynomial that needed a coordinate change",
    )
    args = ap.parse_args(argv)
    cfg = SurveyConfig(
        count=args.count,
        seed=args.seed,
        max_steps=args.max_steps,
        emit_json=args.json,
        show_nonadapted=args.show_nonadapted,
    )
    t0 = time.perf_counter()
    corpus = random_corpus(cfg)
    rows = [survey_one(f, cfg) for f in corpus]
    elapsed = time.perf_counter() - t0
    if cfg.emit_json:
        print(json.dumps(rows, indent=2, sort_keys=True))
        return 0

    faces = Counter(r["face_kind"] for r in rows)
    statuses = Counter(r["status"] for r in rows)
    adapted_n = sum(1 for r in rows if r["adapted"])
    heights = sorted(
        (r["height_float"], r["height"])
        for r in rows
        if r["height_float"] is not None
    )
    jet_lengths = Counter(
        r["jet_length"] for r in rows if r["jet_length"] is not None
    )

    print(f"corpus: {len(rows)} polynomials (seed {cfg.seed})")
    print(f"analysis wall time: {elapsed:.2f}s")
    print()
    print("principal face kinds:")
    for kind, n in faces.most_common():
        print(f"  {kind:20} {n:5}")
    print()
    print("iteration status:")
    for status, n in statuses.most_common():
        print(f"  {status:24} {n:5}")
    print()
    print(f"adapted as given: {adapted_n} / {len(rows)}")
    print()
    print("jet lengths (number of shears needed):")
    for length in sorted(jet_lengths):
        print(f"  {length:2} shears: {jet_lengths[length]:5}")
    print()
    if heights:
        lo_f, lo = heights[0]
        hi_f, hi = heights[-1]
        mid = heights[len(heights) // 2][1]
        print(
            f"height range: {lo} ({lo_f:.3f}) .. {hi} ({hi_f:.3f}), "
            f"median {mid}"
        )
        top = Counter(h for _, h in heights).most_common(8)
        print("most common heights:")
        for h, n in top:
            print(f"  {h:>8} {n:5}")
    if cfg.show_nonadapted:
        print()
        print("polynomials that needed a coordinate change:")
        for r in rows:
            if not r["adapted"]:
                print(
                    f"  {r['input']}  d={r['distance']}  h={r['height']}  "
                    f"jet length {r['jet_length']}"
                )
    return 0


if __name__ == "__main__":
    sys.exit(main())
