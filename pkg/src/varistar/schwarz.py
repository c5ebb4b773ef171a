"""Schwarz-function side of the coefficient problem.

Covers the two-parameter extremal family omega(z) = z(c1 + c*z)/(1 + conj(c1)*c*z),
validation of (c1, c2) against the Schwarz-Pick bound |c2| <= 1 - |c1|^2, and
deterministic sampling of admissible pairs for the Monte Carlo certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cseries import TruncatedSeries, series_geometric, series_mul

# Sampler algorithm identifier, recorded in reports for reproducibility.
RNG_ALGORITHM = "numpy-PCG64"

_REJECTION_CHUNK = 1024


@dataclass(frozen=True)
class SchwarzCoeffs:
    """First two Taylor coefficients of a Schwarz function omega."""

    c1: complex
    c2: complex


@dataclass(frozen=True)
class ExtremalParams:
    """Parameters of the boundary family; |c| = 1 lands on the disc boundary."""

    c1: complex
    c: complex


def extremal_omega(params: ExtremalParams, order: int, tol: float = 1e-12) -> TruncatedSeries:
    """Taylor series of z*(c1 + c*z)/(1 + conj(c1)*c*z) to the given order."""
    c1, c = complex(params.c1), complex(params.c)
    if abs(c1) > 1 + tol or abs(c) > 1 + tol:
        raise ValueError(f"parameters must lie in the closed unit disc: |c1|={abs(c1)}, |c|={abs(c)}")
    numer = TruncatedSeries.from_coeffs([0.0, c1, c], order)
    denom_inv = series_geometric(-np.conj(c1) * c, order)
    return series_mul(numer, denom_inv)


def validate_schwarz_pair(coeffs: SchwarzCoeffs, tol: float = 0.0) -> bool:
    """True iff |c1| <= 1 + tol and |c2| <= 1 - |c1|^2 + tol."""
    m1 = abs(coeffs.c1)
    return m1 <= 1 + tol and abs(coeffs.c2) <= 1 - m1 * m1 + tol


def sample_schwarz_pairs(seed: int, n: int) -> list[SchwarzCoeffs]:
    """n admissible pairs, deterministic in the seed.

    c1 is area-uniform on the closed unit disc (rejection from the square),
    c2 area-uniform on the closed disc of radius 1 - |c1|^2.
    """
    c1, c2 = sample_schwarz_arrays(seed, n)
    return [SchwarzCoeffs(complex(a), complex(b)) for a, b in zip(c1, c2)]


def sample_schwarz_arrays(seed: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Array form of sample_schwarz_pairs; same values for the same seed."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = np.random.default_rng(seed)
    parts = []
    remaining = n
    while remaining > 0:
        m = max(_REJECTION_CHUNK, remaining)
        x = rng.uniform(-1.0, 1.0, m)
        y = rng.uniform(-1.0, 1.0, m)
        keep = x * x + y * y <= 1.0
        got = (x + 1j * y)[keep][:remaining]
        parts.append(got)
        remaining -= got.size
    c1 = np.concatenate(parts) if parts else np.empty(0, dtype=np.complex128)
    # The 1 - 1e-12 factor keeps |c2| strictly below the Schwarz-Pick bound
    # so sampled pairs validate at tol = 0 despite rounding.
    r = (1.0 - np.abs(c1) ** 2) * np.sqrt(rng.uniform(0.0, 1.0, n)) * (1.0 - 1e-12)
    theta = rng.uniform(0.0, 2.0 * np.pi, n)
    c2 = r * np.exp(1j * theta)
    return c1, c2
