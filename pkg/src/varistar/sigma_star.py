"""Constructors and certificates for meromorphic starlike functions.

Two routes build the Taylor polynomial of a class member f (pole at p in
(0,1), image complement starlike about w0):

* the measure route, from a finite atomic probability measure on the unit
  circle via f = w0 + p*w0*exp(sum 2*lambda_k*log(1 - zeta_k*z)) / ((z-p)(1-pz));
* the omega route, from a Schwarz-function polynomial via the positive-real-part
  function P = (1+omega)/(1-omega) and a first-order linear coefficient recurrence.

Both normalize f(0) = 0, f'(0) = 1. A grid certificate checks Re P > 0 on the
truncation (numerical evidence, not a proof).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cseries import (
    TruncatedSeries,
    series_derivative,
    series_div,
    series_exp,
    series_geometric,
    series_log_one_minus,
    series_mul,
)

ADMISSIBILITY_TOL = 1e-9
_NORMALIZATION_TOL = 1e-10


@dataclass(frozen=True)
class PoleParams:
    """The pair (p, w0) defining the subclass."""

    p: float
    w0: complex


@dataclass(frozen=True)
class ProbMeasure:
    """Finite atomic probability measure on the unit circle: (zeta_k, weight_k)."""

    atoms: tuple[tuple[complex, float], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "atoms",
            tuple((complex(z), float(w)) for z, w in self.atoms),
        )


@dataclass(frozen=True)
class CertificateReport:
    """Result of a Re P > 0 grid check on the truncated series."""

    min_re: float
    argmin_point: complex
    grid: tuple[tuple[float, ...], int]
    tol: float
    passed: bool


def validate_pole_params(params: PoleParams, tol: float = ADMISSIBILITY_TOL):
    """Raise unless 0 < p < 1, w0 != 0 and the derived c1 is in the closed unit disc."""
    if not 0 < params.p < 1:
        raise ValueError(f"p must lie in (0, 1), got {params.p}")
    if params.w0 == 0:
        raise ValueError("w0 must be nonzero")
    s = params.p + 1 / params.p + 1 / params.w0
    if abs(s) > 2 + tol:
        raise ValueError(
            f"inadmissible pair: |p + 1/p + 1/w0| = {abs(s)} exceeds 2 "
            f"(derived c1 = {s / 2} outside the closed unit disc)"
        )


def validate_measure(mu: ProbMeasure, tol: float = 1e-12):
    weights = np.array([w for _, w in mu.atoms])
    if np.any(weights < -tol) or abs(weights.sum() - 1.0) > tol:
        raise ValueError("measure weights must be nonnegative and sum to 1")
    for zeta, _ in mu.atoms:
        if abs(abs(zeta) - 1.0) > tol:
            raise ValueError(f"atom {zeta} is not on the unit circle")


def w0_from_c1(p: float, c1: complex, tol: float = ADMISSIBILITY_TOL) -> complex:
    """w0 = -1/(p + 1/p - 2*c1); finite and nonzero since Re(p + 1/p - 2*c1) > 0."""
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if abs(c1) > 1 + tol:
        raise ValueError(f"|c1| = {abs(c1)} exceeds 1")
    return -1.0 / (p + 1.0 / p - 2.0 * c1)


def c1_from_pair(params: PoleParams) -> complex:
    """c1 = (p + 1/p + 1/w0) / 2, the half of the first P-coefficient."""
    validate_pole_params(params)
    return (params.p + 1.0 / params.p + 1.0 / params.w0) / 2.0


def _pole_factor(p: float, order: int) -> TruncatedSeries:
    # p / ((z - p)(1 - pz)) = -1 / ((1 - z/p)(1 - pz))
    return -1 * series_mul(series_geometric(1.0 / p, order), series_geometric(p, order))


def construct_from_measure(
    p: float, mu: ProbMeasure, order: int
) -> tuple[TruncatedSeries, PoleParams]:
    """Taylor series of the class member determined by an atomic measure."""
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    validate_measure(mu)
    c1 = sum(w * z for z, w in mu.atoms)
    w0 = w0_from_c1(p, c1)

    log_sum = TruncatedSeries.zero(order)
    for zeta, weight in mu.atoms:
        log_sum = log_sum + (2.0 * weight) * series_log_one_minus(zeta, order)
    f = w0 + w0 * series_mul(_pole_factor(p, order), series_exp(log_sum))

    _check_normalization(f)
    return f, PoleParams(p, w0)


def construct_from_omega(
    p: float, omega: TruncatedSeries, order: int
) -> tuple[TruncatedSeries, PoleParams]:
    """Taylor series of the class member determined by a Schwarz polynomial.

    Solves z*f'(z) = -(f(z) - w0) * Q(z) coefficientwise, where
    Q = P + p/(z-p) - pz/(1-pz) vanishes at 0 and P = (1+omega)/(1-omega).
    """
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if omega.coeffs[0] != 0:
        raise ValueError("omega must have zero constant term")
    if omega.order < order:
        omega = TruncatedSeries.from_coeffs(omega.coeffs, order)
    elif omega.order > order:
        omega = TruncatedSeries(omega.coeffs[: order + 1])
    c1 = omega[1]
    if abs(c1) > 1 + ADMISSIBILITY_TOL:
        raise ValueError(f"|c1| = {abs(c1)} exceeds 1")
    if abs(c1) >= 1 - 1e-12 and np.any(np.abs(omega.coeffs[2:]) > 1e-12):
        # Schwarz rigidity: |omega'(0)| = 1 forces omega = c1*z exactly.
        raise ValueError("with |c1| = 1 only omega = c1*z is a Schwarz function")

    P = series_div(1 + omega, 1 - omega)
    w0 = w0_from_c1(p, P[1] / 2.0)

    n = np.arange(1, order + 1)
    q = np.empty(order + 1, dtype=np.complex128)
    q[0] = P[0] - 1.0
    q[1:] = P.coeffs[1:] - p ** (-n.astype(float)) - p ** n
    if abs(q[0]) > 1e-9:
        raise ArithmeticError(f"Q(0) = {q[0]} should vanish; internal fault")

    # g = f - w0; (k+1)*g_{k+1} = -sum_{j<=k} g_j * r_{k-j} with r_k = q_{k+1}.
    r = np.append(q[1:], 0.0)
    g = np.empty(order + 1, dtype=np.complex128)
    g[0] = -w0
    for k in range(order):
        g[k + 1] = -np.dot(g[: k + 1], r[k::-1]) / (k + 1)
    f = TruncatedSeries(g + np.concatenate([[w0], np.zeros(order)]))

    _check_normalization(f)
    return f, PoleParams(p, w0)


def carath_from_f(params: PoleParams, f: TruncatedSeries) -> TruncatedSeries:
    """Recover P(z) = -z*f'(z)/(f(z) - w0) - p/(z-p) + pz/(1-pz) from f."""
    validate_pole_params(params)
    if f.order < 2:
        raise ValueError("need order >= 2 to recover P")
    if abs(f[0]) > _NORMALIZATION_TOL or abs(f[1] - 1.0) > _NORMALIZATION_TOL:
        raise ValueError("f must be normalized: f(0) = 0, f'(0) = 1")
    order = f.order
    p = params.p
    zfp = series_derivative(f).shift_up()
    ratio = series_div(zfp, f - params.w0)
    n = np.arange(1, order + 1)
    corr = np.concatenate([[1.0], p ** (-n.astype(float)) + p ** n])
    return TruncatedSeries(corr) - ratio


def starlike_certificate(
    params: PoleParams,
    P: TruncatedSeries,
    radii,
    angles: int,
    tol: float = 1e-9,
) -> CertificateReport:
    """Grid minimum of Re P over r*e^(i*theta); passes iff the minimum exceeds -tol.

    Evidence on the truncated polynomial only: no tail bound is attempted, and
    radii are capped at 0.9 where the truncation is still trustworthy.
    """
    validate_pole_params(params)
    radii = tuple(float(r) for r in radii)
    if any(not 0 < r <= 0.9 for r in radii):
        raise ValueError("radii must lie in (0, 0.9]")
    if angles < 8:
        raise ValueError("need at least 8 angles")
    theta = 2.0 * np.pi * np.arange(angles) / angles
    ring = np.exp(1j * theta)
    min_re = np.inf
    argmin = 0.0 + 0.0j
    for r in radii:
        z = r * ring
        re_vals = P.eval(z).real
        i = int(np.argmin(re_vals))
        if re_vals[i] < min_re:
            min_re = float(re_vals[i])
            argmin = complex(z[i])
    return CertificateReport(
        min_re=min_re,
        argmin_point=argmin,
        grid=(radii, angles),
        tol=tol,
        passed=min_re > -tol,
    )


def _check_normalization(f: TruncatedSeries):
    if abs(f[0]) > _NORMALIZATION_TOL or abs(f[1] - 1.0) > _NORMALIZATION_TOL:
        raise ArithmeticError(
            f"constructed series violates normalization: f(0)={f[0]}, f'(0)={f[1]}"
        )
