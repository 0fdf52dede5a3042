"""Revenue-maximizing pricing under logit demand.

The demand curve mu / (1 + exp(alpha + theta * p)) admits an exact
revenue maximizer through the principal branch of the Lambert W
function. This package computes it in closed form, cross-checks it
against derivative-free oracles, calibrates parameters from observed
price/quantity data, and exposes all of it on the command line.
"""

from .calibration import CalibrationFit, Observation, fit, fit_fixed_mu
from .demand import (
    LogitParams,
    demand,
    demand_d1,
    demand_d2,
    elasticity,
    inflection_price,
    revenue,
    revenue_derivatives,
    share,
    validate_params,
)
from .errors import (
    ConvergenceError,
    DegenerateFitError,
    DomainError,
    InsufficientDataError,
    InvalidBracketError,
    PricingError,
    SearchFailureError,
)
from .experiments import CurveSample, RangeSpec, SweepRow, sample_curves, sweep
from .lambertw import WResult, w0, w0_of_exp
from .oracle import (
    VerificationReport,
    central_difference,
    golden_section_max,
    scan_sign_changes,
    unimodality_scan,
    verify,
)
from .solver import PricingSolution, foc_residual, optimal_price, ratios_closed_form, solve

__version__ = "0.1.0"

__all__ = [
    "CalibrationFit",
    "ConvergenceError",
    "CurveSample",
    "DegenerateFitError",
    "DomainError",
    "InsufficientDataError",
    "InvalidBracketError",
    "LogitDemandRegressor",
    "LogitParams",
    "Observation",
    "PricingError",
    "PricingSolution",
    "RangeSpec",
    "SearchFailureError",
    "SweepRow",
    "VerificationReport",
    "WResult",
    "central_difference",
    "demand",
    "demand_d1",
    "demand_d2",
    "elasticity",
    "fit",
    "fit_fixed_mu",
    "foc_residual",
    "golden_section_max",
    "inflection_price",
    "optimal_price",
    "ratios_closed_form",
    "revenue",
    "revenue_derivatives",
    "sample_curves",
    "scan_sign_changes",
    "share",
    "solve",
    "sweep",
    "unimodality_scan",
    "validate_params",
    "verify",
    "w0",
    "w0_of_exp",
]


def __getattr__(name):
    # Imported lazily so plain library and CLI use never pays the
    # scikit-learn import cost.
    if name == "LogitDemandRegressor":
        from .estimator import LogitDemandRegressor

        return LogitDemandRegressor
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
