"""Certified evaluation of zeta(1+it) and explicit bounds of its modulus.

The package has four layers:

* :mod:`zetabound.zeta_eval` -- certified point evaluation of zeta(1+it)
  plus an independent alternating-series oracle;
* :mod:`zetabound.expsum` -- explicit exponential-sum bounds and the
  optimiser producing inequalities |zeta(1+it)| <= v log t for t >= t0;
* :mod:`zetabound.rs_bounds` -- the Riemann-Siegel-route constants behind
  the affine bound |zeta(1+it)| <= (1/2) log t + C;
* :mod:`zetabound.verifier` -- certified grid scans that check either kind
  of bound over an interval, locate the maximum of |zeta(1+it)|/log t, and
  find where the ratio crosses a given level.

A command-line front end lives in :mod:`zetabound.cli`.
"""

from .errors import ConvergenceError, CrossingNotFound, ResourceBudgetError
from .expsum import (
    AsymptoticConstants,
    BoundTriple,
    ExpSumCoeffs,
    TABLE_T0,
    asymptotic_constants,
    coeffs,
    h_E,
    h_G,
    kuzmin_landau_bound,
    omega,
    omega_residual,
    optimal_bound_params,
    partial_sum_bound,
    y_E,
    y_G,
)
from .rs_bounds import (
    AFFINE_INTERCEPT,
    AffineBound,
    DEFAULT_CONSTANTS,
    GAMMA_MINUS_HALF_LOG_2PI,
    RSConstants,
    affine_C,
    b0,
    b1,
    c0,
    c1,
    c_sigma,
    chi_upper,
    ck_contour,
    computed_constants,
    kappa1,
    kappa2,
    theta,
)
from .verifier import (
    DEFAULT_BUDGET,
    GRID_NOTE,
    ScanConfig,
    ScanPoint,
    ScanReport,
    VerificationResult,
    check_bound,
    crossing_point,
    max_ratio,
    scan_interval,
)
from .zeta_eval import (
    EULER_GAMMA,
    CertifiedComplex,
    EvalConfig,
    choose_N,
    error_bound,
    eval_zeta_certified,
    harmonic_bound,
    oracle_zeta,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "CrossingNotFound",
    "ResourceBudgetError",
    "AsymptoticConstants",
    "BoundTriple",
    "ExpSumCoeffs",
    "TABLE_T0",
    "asymptotic_constants",
    "coeffs",
    "h_E",
    "h_G",
    "kuzmin_landau_bound",
    "omega",
    "omega_residual",
    "optimal_bound_params",
    "partial_sum_bound",
    "y_E",
    "y_G",
    "AFFINE_INTERCEPT",
    "AffineBound",
    "DEFAULT_CONSTANTS",
    "GAMMA_MINUS_HALF_LOG_2PI",
    "RSConstants",
    "affine_C",
    "b0",
    "b1",
    "c0",
    "c1",
    "c_sigma",
    "chi_upper",
    "ck_contour",
    "computed_constants",
    "kappa1",
    "kappa2",
    "theta",
    "DEFAULT_BUDGET",
    "GRID_NOTE",
    "ScanConfig",
    "ScanPoint",
    "ScanReport",
    "VerificationResult",
    "check_bound",
    "crossing_point",
    "max_ratio",
    "scan_interval",
    "EULER_GAMMA",
    "CertifiedComplex",
    "EvalConfig",
    "choose_N",
    "error_bound",
    "eval_zeta_certified",
    "harmonic_bound",
    "oracle_zeta",
    "__version__",
]
