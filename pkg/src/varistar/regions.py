"""Closed-form coefficient geometry for the second Taylor coefficient.

The a2 formula a2 = 1/p + p*M with
M = (c1^2 - c2 + p^2 - 2*c1*p) / (1 + p^2 - 2*c1*p), the two historical
bounding discs, the exact fixed-(p, w0) disc, the fixed-p union disc
|a2 - 1/p| <= p, and the membership/tangency predicates that tie them together.
"""

from __future__ import annotations

from dataclasses import dataclass

from .schwarz import SchwarzCoeffs, validate_schwarz_pair
from .sigma_star import PoleParams, c1_from_pair, validate_pole_params

DEFAULT_MEMBERSHIP_TOL = 1e-9


@dataclass(frozen=True)
class Disc:
    """Closed disc |z - center| <= radius; radius 0 is a legitimate point region."""

    center: complex
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError(f"radius must be nonnegative, got {self.radius}")


@dataclass(frozen=True)
class A2Report:
    """An a2 value together with its Moebius decomposition and provenance."""

    a2: complex
    M: complex
    denominator: complex
    route: str


@dataclass(frozen=True)
class TangencyReport:
    """Internal-tangency diagnostic for a disc pair."""

    delta_center: float
    radius_gap: float
    internally_tangent: bool


def a2_closed_form(p: float, coeffs: SchwarzCoeffs, tol: float = 1e-9) -> A2Report:
    """a2 = 1/p + p*(c1^2 - c2 + p^2 - 2*c1*p)/(1 + p^2 - 2*c1*p)."""
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if not validate_schwarz_pair(coeffs, tol):
        raise ValueError(
            f"invalid Schwarz pair: need |c1| <= 1 and |c2| <= 1 - |c1|^2, "
            f"got c1={coeffs.c1}, c2={coeffs.c2}"
        )
    c1, c2 = coeffs.c1, coeffs.c2
    denom = 1 + p * p - 2 * c1 * p
    m = (c1 * c1 - c2 + p * p - 2 * c1 * p) / denom
    return A2Report(a2=1.0 / p + p * m, M=m, denominator=denom, route="closed-form")


def disc_miller72(params: PoleParams) -> Disc:
    """1972 bound: |a2 + (w0/2)(p^2 + 1/p^2 + 1/w0^2)| <= |w0|."""
    validate_pole_params(params)
    p, w0 = params.p, params.w0
    center = -(w0 / 2.0) * (p * p + 1.0 / (p * p) + 1.0 / (w0 * w0))
    return Disc(center=center, radius=abs(w0))


def disc_miller80(params: PoleParams) -> Disc:
    """1980 bound: |a2 - (1 + p^2)/p - w0| <= |w0|."""
    validate_pole_params(params)
    return Disc(center=params.p + 1.0 / params.p + params.w0, radius=abs(params.w0))


def disc_exact(params: PoleParams) -> Disc:
    """Exact fixed-(p, w0) region; degenerates to a point when |c1| = 1."""
    validate_pole_params(params)
    p, w0 = params.p, params.w0
    s = p + 1.0 / p + 1.0 / w0
    center = (p + 1.0 / p + w0) - (w0 / 4.0) * s * s
    radius = abs(w0) * (1.0 - abs(s) ** 2 / 4.0)
    return Disc(center=center, radius=max(radius, 0.0))


def disc_theorem2(p: float) -> Disc:
    """Exact fixed-p region over all admissible w0: |a2 - 1/p| <= p."""
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    return Disc(center=1.0 / p, radius=p)


def disc_contains(d: Disc, point: complex, tol: float = DEFAULT_MEMBERSHIP_TOL) -> bool:
    return abs(point - d.center) <= d.radius + tol


def tangency_check(inner: Disc, outer: Disc, tol: float = 1e-12) -> TangencyReport:
    """Internal tangency: inner contained in outer with |delta_center| = radius gap."""
    delta = abs(inner.center - outer.center)
    gap = outer.radius - inner.radius
    return TangencyReport(
        delta_center=delta,
        radius_gap=gap,
        internally_tangent=(abs(delta - gap) <= tol and gap >= -tol),
    )


def expected_tangency_offset(params: PoleParams) -> float:
    """|w0|*|c1|^2: the analytic center offset and radius gap for both Miller discs."""
    c1 = c1_from_pair(params)
    return abs(params.w0) * abs(c1) ** 2
