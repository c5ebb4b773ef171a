"""Numerical certification harness.

Boundary sweeps along the extremal family, Monte Carlo inclusion tests for
the exact and fixed-p discs, cross-route agreement between the closed-form
a2 and the series recurrence, and the positivity check Re a2 > 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import impl
from .cseries import TruncatedSeries
from .regions import a2_closed_form, disc_exact
from .schwarz import (
    RNG_ALGORITHM,
    ExtremalParams,
    SchwarzCoeffs,
    extremal_omega,
    sample_schwarz_arrays,
)
from .sigma_star import PoleParams, c1_from_pair, construct_from_omega

DEFAULT_MEMBERSHIP_TOL = 1e-9
DEFAULT_CROSS_TOL = 1e-10


class VerificationError(AssertionError):
    """A certified claim failed numerically."""


@dataclass(frozen=True)
class RegionStats:
    """Outcome of a Monte Carlo inclusion run."""

    n_samples: int
    violations: int
    max_radial_excess: float
    sup_attained: float
    seed: int
    rng_algorithm: str = RNG_ALGORITHM


def sweep_boundary(params: PoleParams, K: int, order: int = 16) -> list[complex]:
    """a2 values along |c| = 1 in the extremal family; all lie on the exact circle."""
    if K < 4:
        raise ValueError("need K >= 4 sweep points")
    c1 = c1_from_pair(params)
    if abs(c1) >= 1 - 1e-12:
        raise ValueError("degenerate |c1| = 1: the boundary is a single point")
    points = []
    for k in range(K):
        c = np.exp(2j * np.pi * k / K)
        omega = extremal_omega(ExtremalParams(c1=c1, c=c), order)
        points.append(a2_closed_form(params.p, SchwarzCoeffs(omega[1], omega[2])).a2)
    return points


def monte_carlo_region(
    p: float, seed: int, n: int, tol: float = DEFAULT_MEMBERSHIP_TOL
) -> RegionStats:
    """Check n sampled pairs for membership in the per-pair exact disc and in
    the fixed-p disc |a2 - 1/p| <= p. A nonzero violation count is a failing
    result, not an exception."""
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if n < 1:
        raise ValueError("need n >= 1 samples")
    c1, c2 = sample_schwarz_arrays(seed, n)
    _, excess_exact, dev = impl.region_eval(p, c1, c2)
    excess_t2 = dev - p
    bad = (excess_exact > tol) | (excess_t2 > tol)
    return RegionStats(
        n_samples=n,
        violations=int(np.count_nonzero(bad)),
        max_radial_excess=float(np.maximum(excess_exact, excess_t2).max()),
        sup_attained=float(dev.max()),
        seed=seed,
    )


def min_re_a2_sampled(p: float, seed: int, n: int) -> float:
    """Minimum sampled Re a2; used by the positivity sweep spot-check."""
    c1, c2 = sample_schwarz_arrays(seed, n)
    a2, _, _ = impl.region_eval(p, c1, c2)
    return float(a2.real.min())


def cross_validate_a2(
    p: float,
    coeffs: SchwarzCoeffs,
    order: int = 16,
    tol: float = DEFAULT_CROSS_TOL,
) -> bool:
    """Closed-form a2 against the a2 extracted from the series recurrence."""
    if order < 6:
        raise ValueError("need order >= 6")
    closed = a2_closed_form(p, coeffs).a2
    omega = TruncatedSeries.from_coeffs([0.0, coeffs.c1, coeffs.c2], order)
    f, _ = construct_from_omega(p, omega, order)
    return abs(closed - f[2]) <= tol


def positivity_sweep(
    p_values, seed: int = 0, samples: int = 2000, tol: float = DEFAULT_MEMBERSHIP_TOL
) -> list[tuple[float, float]]:
    """(p, 1/p - p) for each p: the minimum possible Re a2 over the class.

    Raises VerificationError if any lower bound fails to be positive or any
    Monte Carlo sample undercuts it beyond tol.
    """
    results = []
    for p in p_values:
        if not 0 < p < 1:
            raise ValueError(f"p must lie in (0, 1), got {p}")
        bound = 1.0 / p - p
        if bound <= 0:
            raise VerificationError(f"lower bound 1/p - p = {bound} not positive at p={p}")
        if samples:
            sampled = min_re_a2_sampled(p, seed, samples)
            if sampled < bound - tol:
                raise VerificationError(
                    f"sampled Re a2 = {sampled} undercuts bound {bound} at p={p}"
                )
        results.append((float(p), bound))
    return results
