"""Numeric estimation of oscillatory-integral decay rates.

I(lambda) = integral of exp(i*lambda*f(x)) * a(x) over the plane, with a
fixed smooth compactly supported amplitude a.  As lambda grows, |I| decays
like lambda^(-1/h) times a possible log factor, where h is the height of
f; this module estimates the decay exponent from a geometric lambda grid
so the exact engine can be sanity-checked against quadrature.

Everything here is floating point and deterministic for fixed parameters:
a uniform tensor-product midpoint rule over [-radius, radius]^2, with the
per-axis cell count chosen to keep the phase increment per cell small and
capped at 4096.  The amplitude vanishes to infinite order at the edge of
the square, so the integrand is globally smooth and the midpoint rule's
error is driven by phase resolution alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bipoly import BiPoly
from .errors import GridTooCoarse

DEFAULT_RADIUS = 0.5
MIN_GRID = 256
MAX_GRID = 4096
TARGET_PHASE_PER_CELL = 2.0
# refuse to integrate once the midpoint rule is sampling under pi radians
# per cell per axis with no headroom left
PHASE_PER_CELL_LIMIT = 2.0 * math.pi
LOG_MARGIN = 0.7
_BLOCK = 512


@dataclass(frozen=True, slots=True)
class DecayEstimate:
    """Fit of log|I| = intercept - fitted_exponent*log(lam) +
    fitted_log_power*log(log(lam)) over a geometric lambda grid."""

    lambdas: tuple[float, ...]
    magnitudes: tuple[float, ...]
    fitted_exponent: float
    fitted_log_power: int
    residual: float


def bump_profile(t: np.ndarray) -> np.ndarray:
    """C-infinity profile supported on [-1, 1], equal to 1 at 0."""
    out = np.zeros_like(t, dtype=float)
    inside = np.abs(t) < 1.0
    ti = t[inside]
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - ti * ti))
    return out


def gradient_bound(f: BiPoly, radius: float) -> float:
    """Upper bound for max(|df/dx1|, |df/dx2|) on the closed square."""
    b1 = 0.0
    b2 = 0.0
    for (j, k), c in f.terms().items():
        scale = abs(float(c)) * radius ** (j + k - 1)
        b1 += j * scale
        b2 += k * scale
    return max(b1, b2)


def default_grid_size(f: BiPoly, lam: float, radius: float = DEFAULT_RADIUS) -> int:
    """Per-axis cell count aiming at TARGET_PHASE_PER_CELL radians per
    cell, clamped to [MIN_GRID, MAX_GRID]."""
    rate = lam * gradient_bound(f, radius)
    n = math.ceil(rate * 2.0 * radius / TARGET_PHASE_PER_CELL)
    return max(MIN_GRID, min(MAX_GRID, n))


def estimate_integral(
    f: BiPoly,
    lam: float,
    radius: float = DEFAULT_RADIUS,
    grid_n: int | None = None,
) -> complex:
    """Midpoint-rule estimate of the oscillatory integral at one lambda.

    Raises GridTooCoarse when the requested grid cannot resolve the phase
    (more than PHASE_PER_CELL_LIMIT radians per cell per axis).
    """
    if f.is_zero:
        raise ValueError("integrand phase must be a nonzero polynomial")
    if lam <= 0:
        raise ValueError("lambda must be positive")
    if radius <= 0:
        raise ValueError("radius must be positive")
    if grid_n is None:
        grid_n = default_grid_size(f, lam, radius)
    if grid_n < 64:
        raise ValueError("grid_n must be at least 64")
    cell = 2.0 * radius / grid_n
    phase_per_cell = lam * gradient_bound(f, radius) * cell
    if phase_per_cell > PHASE_PER_CELL_LIMIT:
        raise GridTooCoarse(
            f"{phase_per_cell:.2f} rad per cell at lambda={lam:g}; "
            f"needs more than {grid_n} cells per axis"
        )
    xs = (np.arange(grid_n) + 0.5) * cell - radius
    w = bump_profile(xs / radius)
    # rows[k](x1) is the coefficient of x2^k; evaluate on the x1 axis once,
    # then run Horner in x2 blockwise to bound memory
    rows = f.x2_coefficients()
    a_vals = np.zeros((len(rows), grid_n))
    for k, row in enumerate(rows):
        if not row.is_zero:
            a_vals[k] = np.polynomial.polynomial.polyval(
                xs, [float(c) for c in row.coeffs]
            )
    total = 0.0 + 0.0j
    for start in range(0, grid_n, _BLOCK):
        x2 = xs[start : start + _BLOCK]
        phi = np.broadcast_to(a_vals[-1][:, None], (grid_n, len(x2))).copy()
        for k in range(len(rows) - 2, -1, -1):
            phi *= x2[None, :]
            phi += a_vals[k][:, None]
        block = np.exp(1j * lam * phi)
        block *= w[:, None]
        block *= w[None, start : start + _BLOCK]
        total += block.sum()
    return total * cell * cell


def fit_decay(
    f: BiPoly,
    lambda_min: float,
    lambda_max: float,
    points: int = 7,
    radius: float = DEFAULT_RADIUS,
    grid_n: int | None = None,
) -> DecayEstimate:
    """Fit the decay exponent over a geometric lambda grid.

    The model is log|I| = c - s*log(lam) + r*log(log(lam)) with the log
    power r restricted to {0, 1}; r = 1 is selected only when it shrinks
    the root-mean-square residual below LOG_MARGIN times the plain fit's.
    """
    if not 0 < lambda_min < lambda_max:
        raise ValueError("need 0 < lambda_min < lambda_max")
    if points < 5:
        raise ValueError("need at least 5 sample points")
    if lambda_min <= 1.0:
        raise ValueError("lambda_min must exceed 1 for the log-log model")
    ratio = lambda_max / lambda_min
    lambdas = [lambda_min * ratio ** (i / (points - 1)) for i in range(points)]
    mags = [abs(estimate_integral(f, lam, radius, grid_n)) for lam in lambdas]
    if min(mags) <= 0.0:
        raise ValueError("integral magnitude underflowed; shrink lambda_max")
    logl = np.log(np.array(lambdas))
    y = np.log(np.array(mags))
    design = np.column_stack([np.ones_like(logl), -logl])
    fits = {}
    for r in (0, 1):
        target = y - r * np.log(logl)
        sol, *_ = np.linalg.lstsq(design, target, rcond=None)
        rms = float(np.sqrt(np.mean((design @ sol - target) ** 2)))
        fits[r] = (float(sol[1]), rms)
    r = 1 if fits[1][1] < LOG_MARGIN * fits[0][1] else 0
    s, rms = fits[r]
    return DecayEstimate(
        lambdas=tuple(lambdas),
        magnitudes=tuple(mags),
        fitted_exponent=s,
        fitted_log_power=r,
        residual=rms,
    )
