"""Lauricella and Srivastava matrix hypergeometric functions.

Thin wrapper over the compiled core. All matrices are square
numpy arrays of complex128; evaluation points are sequences of complex
numbers.
"""

from ._lmx import (  # noqa: F401
    FunctionSpec,
    SeriesValue,
    SpectralSummary,
    LmxInputError,
    LmxNumericalError,
    beta_matrix,
    coefficient_residual,
    commute_residual,
    convergence_report,
    dirichlet_simplex_integral,
    evaluate,
    function_ids,
    gamma_limit_approx,
    hyper0F1,
    integral_value,
    is_positive_stable,
    matrix_gamma,
    necessity_probe,
    parse_problem,
    pde_sweep_max_relative,
    pochhammer,
    pointwise_residual,
    reciprocal_gamma,
    representations_for,
    roles_for,
    scalar_power,
    spectral_summary,
    term_coefficient,
    validate_parameters,
)

__version__ = "0.1.0"
