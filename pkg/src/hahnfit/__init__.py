"""Hahn and Jacobi polynomial expansions and least squares on equidistant grids.

The discrete least-squares projection of grid samples onto low-degree
polynomials is computed as a truncated Hahn series and compared against the
truncated Jacobi (continuous) series; the package also ships the building
blocks (stable Gamma-based combinatorics, Gauss-Legendre and trapezoid
quadrature, total-variation estimation) and an experiment harness that
verifies the boundedness, limit-rate, norm-identity, and convergence
properties the construction relies on.
"""

from .errors import (
    AdmissibilityError,
    ConditioningError,
    DegenerateRecurrenceError,
    DegreeExceedsGridError,
    DomainError,
    ExtrapolationWarning,
    FamilyExhaustedError,
    QuadratureAccuracyWarning,
    UnsupportedParametersError,
)
from .expansion import (
    CoefficientVector,
    ErrorPair,
    Grid,
    SampledFunction,
    compensated_sum,
    discrete_inner_product,
    error_bound_term,
    evaluate_jacobi_series,
    hahn_coefficients,
    jacobi_coefficients,
    jacobi_partial_sum,
    ls_evaluate,
    pointwise_error_pair,
)
from .hahn import (
    HahnContext,
    HahnRecurrenceRow,
    admissible_degree,
    hahn_eval,
    hahn_norm,
    hahn_recurrence_row,
    hahn_table,
    hahn_weight,
    hahn_weight_grid,
    norm_ratio_identity_check,
    normalized_hahn_eval,
    weight_ratio_check,
)
from .jacobi import (
    JacobiParams,
    JacobiRecurrenceRow,
    jacobi_eval,
    jacobi_max_bound,
    jacobi_norm,
    jacobi_recurrence_row,
    jacobi_table,
    jacobi_tv_bound,
    jacobi_weight,
    weighted_envelope_bound,
)
from .oracle import DesignMatrix, build_design_matrix, oracle_fit, residual_norm
from .quadrature import (
    QuadratureSpec,
    gauss_legendre_integrate,
    gauss_legendre_nodes,
    integrate,
    jacobi_coefficient_continuous,
    trapezoid_integrate,
)
from .registry import REGISTRY, TestFunction, get_test_function
from .special import LogValue, gamma_ratio_estimate, log_binomial, log_gamma, pochhammer
from .variation import ProductBoundCheck, TVEstimate, product_bound_check, tv_estimate

__version__ = "0.1.0"
