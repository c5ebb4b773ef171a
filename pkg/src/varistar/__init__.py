"""varistar: variability discs for the second Taylor coefficient of
meromorphic starlike functions with a simple pole in (0, 1)."""

from .backend import BACKEND_NAME
from .cseries import (
    DEFAULT_ORDER,
    TruncatedSeries,
    series_derivative,
    series_div,
    series_exp,
    series_geometric,
    series_log_one_minus,
    series_mul,
)
from .regions import (
    A2Report,
    Disc,
    TangencyReport,
    a2_closed_form,
    disc_contains,
    disc_exact,
    disc_miller72,
    disc_miller80,
    disc_theorem2,
    expected_tangency_offset,
    tangency_check,
)
from .schwarz import (
    RNG_ALGORITHM,
    ExtremalParams,
    SchwarzCoeffs,
    extremal_omega,
    sample_schwarz_pairs,
    validate_schwarz_pair,
)
from .sigma_star import (
    CertificateReport,
    PoleParams,
    ProbMeasure,
    c1_from_pair,
    carath_from_f,
    construct_from_measure,
    construct_from_omega,
    starlike_certificate,
    validate_pole_params,
    w0_from_c1,
)
from .verify import (
    RegionStats,
    VerificationError,
    cross_validate_a2,
    monte_carlo_region,
    positivity_sweep,
    sweep_boundary,
)

__version__ = "0.1.0"

__all__ = [
    "A2Report",
    "BACKEND_NAME",
    "CertificateReport",
    "DEFAULT_ORDER",
    "Disc",
    "ExtremalParams",
    "PoleParams",
    "ProbMeasure",
    "RNG_ALGORITHM",
    "RegionStats",
    "SchwarzCoeffs",
    "TangencyReport",
    "TruncatedSeries",
    "VerificationError",
    "a2_closed_form",
    "c1_from_pair",
    "carath_from_f",
    "construct_from_measure",
    "construct_from_omega",
    "cross_validate_a2",
    "disc_contains",
    "disc_exact",
    "disc_miller72",
    "disc_miller80",
    "disc_theorem2",
    "expected_tangency_offset",
    "extremal_omega",
    "monte_carlo_region",
    "positivity_sweep",
    "sample_schwarz_pairs",
    "series_derivative",
    "series_div",
    "series_exp",
    "series_geometric",
    "series_log_one_minus",
    "series_mul",
    "starlike_certificate",
    "sweep_boundary",
    "tangency_check",
    "validate_pole_params",
    "validate_schwarz_pair",
    "w0_from_c1",
]
