"""Shared generators and strategies for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from adaptcoord import BiPoly

CORPUS_SEED = 20260822


def random_corpus(n: int, seed: int = CORPUS_SEED) -> list[BiPoly]:
    """Seeded random polynomials: 2..8 terms, total degree of each term
    in [2, 10], integer coefficients in [-5, 5], positive x2-degree,
    vanishing to order >= 2 at the origin."""
    rng = random.Random(seed)
    out: list[BiPoly] = []
    while len(out) < n:
        terms: dict[tuple[int, int], int] = {}
        for _ in range(rng.randint(2, 8)):
            j = rng.randint(0, 10)
            k = rng.randint(0, 10 - j)
            if j + k < 2:
                continue
            c = rng.randint(-5, 5)
            if c:
                terms[(j, k)] = terms.get((j, k), 0) + c
        f = BiPoly(terms)
        if f.is_zero or f.x2_degree < 1 or f.origin_order < 2:
            continue
        out.append(f)
    return out


coefficients = st.fractions(
    min_value=-6, max_value=6, max_denominator=4
).filter(lambda c: c != 0)

exponent_pairs = st.tuples(
    st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8)
)


@st.composite
def bipolys(draw, min_terms: int = 1, max_terms: int = 6) -> BiPoly:
    pairs = draw(
        st.lists(
            exponent_pairs, min_size=min_terms, max_size=max_terms, unique=True
        )
    )
    terms = {pair: draw(coefficients) for pair in pairs}
    return BiPoly(terms)


@st.composite
def analyzable_bipolys(draw) -> BiPoly:
    """Nonzero, vanishing to order >= 2, positive x2-degree."""
    f = draw(
        bipolys(min_terms=2, max_terms=6).filter(
            lambda g: not g.is_zero
            and g.origin_order >= 2
            and g.x2_degree >= 1
        )
    )
    return f


def frac(a: int, b: int = 1) -> Fraction:
    return Fraction(a, b)
