"""Acceptance gate: eight criteria, each printing one PASS/FAIL line.

Every criterion runs inside a stopwatch; the line reports the verdict and
the elapsed time, and the test fails if the work fails or the stated time
budget is exceeded.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from adaptcoord import (
    AdaptStatus,
    BiPoly,
    FaceKind,
    ShearAxis,
    ShearChange,
    adapt,
    analyze,
    apply_shear,
    build_polyhedron,
    check_adapted,
    distance,
    distance_from_clusters,
    edge_weight,
    fit_decay,
    height,
    newton_polyhedron,
    parse,
    predict_shear_vertices,
    principal_face,
    principal_part,
    quasihomogeneous_height,
    scale_axes,
    swap_axes,
    top_clusters,
    vertices_from_clusters,
)
from conftest import CORPUS_SEED, random_corpus

# polynomials whose adapted systems are reachable by x2-shears (possibly
# after an axis swap) with coefficients in {-2..2} and exponents <= 4;
# also the non-adapted workload for criteria 6 and 8
CURATED = [
    "x1^2 + x2^2",
    "x1*x2",
    "x1^2*x2^2",
    "x2^2 - x1^2",
    "x2^2 - x1^3",
    "x2^3 - x1^4",
    "x1*x2^2 - x1^3*x2",
    "(x2 - x1^2)^2",
    "(x2 - x1^2)^2 + x1^5",
    "(x2 - x1^2)^2 + x1^6",
    "(x2 - x1^2)^2 + x1^7",
    "(x2 - x1^2)^2 - x1^4*x2",
    "(x2 - 2*x1^2)^2 + x1^5",
    "(x2 + 2*x1^2)^2 + x1^7",
    "(x2 - x1^2 - x1^3)^2",
    "(x2 - x1^2 - x1^3)^2 + x1^9",
    "(x2 - x1^2 + x1^4)^2 + x1^9",
    "(x2 - x1 - x1^2)^2 + x1^6",
    "x1*(x2 - x1)^2",
    "x1*(x2 - x1)^2 + x1^6",
    "x2^3 - 3*x1^2*x2 + 2*x1^3",
    "(x2 - x1)^2*(x2 + x1)",
    "(x2 - x1^2)^3 + x1^10",
    "(x2 - x1^2)^3 + x1^9*x2",
    "(x2 - x1^3)^2 + x1^8",
    "(x2 - x1^4)^2 + x1^9",
    "(x2 - 2*x1^2 + x1^3)^2 + x1^8",
    "(x2^2 - x1^3)^2",
    "x1^3*x2 + x1^2*x2^3",
    "x1^5 + x1^2*x2 + x2^4",
    "(x1 - x2^2)^2 + x2^5",
    "(x1 - x2^2)^2 + x1^5",
    "(x2 + x1)^2*(x2 - x1) + x1^5",
]

SHEAR_GRID = [Fraction(c) for c in (-2, -1, 0, 1, 2)]


@pytest.fixture(scope="module")
def corpus():
    return random_corpus(500)


def run_criterion(capsys, label: str, limit: float, body) -> None:
    start = time.perf_counter()
    failed = True
    try:
        body()
        failed = False
    finally:
        elapsed = time.perf_counter() - start
        verdict = "PASS" if not failed and elapsed <= limit else "FAIL"
        with capsys.disabled():
            print(f"acceptance {label}: {verdict} ({elapsed:.2f}s, limit {limit:g}s)")
    assert elapsed <= limit, f"{label} exceeded {limit}s: {elapsed:.2f}s"


def test_criterion_1_exact_heights(capsys):
    def body():
        expected = {
            "x1^2 + x2^2": Fraction(1),
            "x1*x2^2 - x1^3*x2": Fraction(5, 3),
            "(x2 - x1^2)^2": Fraction(2),
            "(x2 - x1^2)^2 + x1^5": Fraction(10, 7),
            "(x2^2 - x1^3)^2": Fraction(12, 5),
        }
        for src, want in expected.items():
            assert height(parse(src)) == want, src

    run_criterion(capsys, "1 exact height suite", 1.0, body)


def test_criterion_2_nontermination_certificate(capsys):
    def body():
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
        # alternating-sign branch of x1^2/(1+x1), one term per exponent
        assert [m for _, m in res.jet.terms] == list(range(2, 10))
        assert all(b == (-1) ** m for (b, m) in res.jet.terms)
        for step in res.steps:
            assert step.multiplicity == 2
            assert step.distance == Fraction(2 * step.exponent, step.exponent + 1)

    run_criterion(capsys, "2 non-termination certificate", 1.0, body)


def test_criterion_3_cluster_hull_equivalence(capsys, corpus):
    def body():
        assert len(corpus) >= 500
        for f in corpus:
            hull = newton_polyhedron(f)
            cl = top_clusters(f)
            assert tuple(vertices_from_clusters(cl)) == hull.vertices, f
            assert distance_from_clusters(cl) == distance(hull), f

    run_criterion(capsys, "3 cluster/hull equivalence (500 random)", 10.0, body)


def test_criterion_4_shear_vertex_prediction(capsys):
    def body():
        rng = random.Random(CORPUS_SEED + 1)
        done = 0
        while done < 200:
            nu1 = rng.randint(0, 3)
            nu2 = rng.randint(0, 2)
            p = rng.randint(1, 4)
            roots: dict[Fraction, int] = {}
            for _ in range(rng.randint(1, 3)):
                r = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3]))
                if r != 0:
                    roots[r] = rng.randint(1, 3)
            if not roots or nu1 + nu2 + sum(roots.values()) < 2:
                continue
            P = BiPoly.monomial(nu1, nu2)
            for r, m in roots.items():
                factor = BiPoly.x2() - BiPoly.monomial(p, 0, r)
                for _ in range(m):
                    P = P * factor
            pool = list(roots) + [Fraction(5), Fraction(-7, 2), Fraction(1, 6)]
            b = rng.choice(pool)
            first, last = predict_shear_vertices(P, b)
            g = apply_shear(P, ShearChange(ShearAxis.X2, b, p))
            hull = build_polyhedron(g.support)
            assert hull.first == first, (P, b)
            assert hull.last == last, (P, b)
            done += 1

    run_criterion(capsys, "4 shear vertex prediction (200 random)", 10.0, body)


def _sheared(f: BiPoly, c: Fraction, m: int) -> BiPoly:
    # coefficient 0 means no shear at this exponent
    return f if c == 0 else apply_shear(f, ShearChange(ShearAxis.X2, c, m))


def _brute_force_best(f: BiPoly) -> Fraction:
    best = distance(newton_polyhedron(f))
    for c1 in SHEAR_GRID:
        f1 = _sheared(f, c1, 1)
        for c2 in SHEAR_GRID:
            f2 = _sheared(f1, c2, 2)
            for c3 in SHEAR_GRID:
                f3 = _sheared(f2, c3, 3)
                for c4 in SHEAR_GRID:
                    d = distance(build_polyhedron(_sheared(f3, c4, 4).support))
                    if d > best:
                        best = d
    return best


def test_criterion_5_brute_force_height_oracle(capsys):
    def body():
        assert len(CURATED) >= 30
        for src in CURATED:
            f = parse(src)
            h = height(f)
            bf = max(_brute_force_best(f), _brute_force_best(swap_axes(f)))
            assert h == bf, (src, h, bf)

    run_criterion(capsys, "5 brute-force height oracle (33 curated)", 60.0, body)


def test_criterion_6_adaptedness_biconditional(capsys, corpus):
    def body():
        pool = corpus + [parse(src) for src in CURATED]
        nonadapted = 0
        for f in pool:
            rep = check_adapted(f)
            # independent recomputation of the three conditions
            hull = newton_polyhedron(f)
            d = distance(hull)
            face = principal_face(hull)
            cond_a = face.kind is FaceKind.COMPACT_EDGE
            g = f
            if face.kind is FaceKind.VERTICAL_HALFLINE:
                g = swap_axes(f)
            elif cond_a:
                w = edge_weight(*face.points)
                if w.k1 > w.k2:
                    g = swap_axes(f)
            face_g = principal_face(newton_polyhedron(g))
            if face_g.kind is FaceKind.COMPACT_EDGE:
                w = edge_weight(*face_g.points)
                cond_b = (w.k2 / w.k1).denominator == 1
                data = analyze(principal_part(g))
                cond_c = Fraction(data.max_real_multiplicity) > d
            else:
                cond_b = face_g.kind is FaceKind.VERTEX
                cond_c = False
            assert rep.condition_a == cond_a, f
            assert rep.condition_b == cond_b, f
            assert rep.condition_c == cond_c, f
            assert rep.adapted == (not (cond_a and cond_b and cond_c)), f
            res = adapt(f)
            if not rep.adapted:
                nonadapted += 1
                # one shear step strictly increases the distance
                g1 = apply_shear(
                    g,
                    ShearChange(
                        ShearAxis.X2,
                        rep.witness.coefficient,
                        rep.witness.exponent,
                    ),
                )
                assert distance(newton_polyhedron(g1)) > d, f
            else:
                assert res.height == d, f
            # height never exceeds the principal part's own height
            if face_g.kind is FaceKind.COMPACT_EDGE:
                assert res.height <= quasihomogeneous_height(principal_part(g)), f
        assert nonadapted >= 10  # the curated list must exercise the branch

    run_criterion(capsys, "6 adaptedness biconditional", 10.0, body)


def test_criterion_7_decay_cross_check(capsys):
    def body():
        cases = [
            ("x1^2 + x2^2", 1.0, None),
            ("(x2 - x1^2)^2", 0.5, None),
            ("x1^2*x2^2", 0.5, 1),
        ]
        for src, want, log_power in cases:
            est = fit_decay(parse(src), 10.0, 1.0e4, points=7)
            assert abs(est.fitted_exponent - want) <= 0.15, (
                src,
                est.fitted_exponent,
            )
            if log_power is not None:
                assert est.fitted_log_power == log_power, src

    run_criterion(capsys, "7 numeric decay cross-check", 120.0, body)


def test_criterion_8_invariance_suite(capsys, corpus):
    def body():
        pool = corpus + [parse(src) for src in CURATED]
        for i, f in enumerate(pool):
            rep = check_adapted(f)
            res = adapt(f)
            assert check_adapted(swap_axes(f)).adapted == rep.adapted, f
            assert adapt(swap_axes(f)).height == res.height, f
            if i % 2:
                c1, c2 = Fraction(-2), Fraction(3)
            else:
                c1, c2 = Fraction(1, 2), Fraction(-3, 4)
            scaled = scale_axes(f, c1, c2)
            assert check_adapted(scaled).adapted == rep.adapted, f
            assert adapt(scaled).height == res.height, f
            exps = [s.exponent for s in res.steps]
            assert exps == sorted(set(exps)), f  # strictly increasing
            mults = [s.multiplicity for s in res.steps]
            assert all(a >= b for a, b in zip(mults, mults[1:])), f

    run_criterion(capsys, "8 invariance suite", 10.0, body)
