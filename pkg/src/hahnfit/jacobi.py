"""Jacobi polynomials P_k^(alpha,beta) on [-1, 1].

Evaluation by forward three-term recurrence, closed-form weighted norms, and
the alpha = beta diagnostics (endpoint max, total-variation bound, weighted
envelope) used by the verification suites.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ExtrapolationWarning, UnsupportedParametersError
from .special import LogValue, log_binomial, log_gamma

__all__ = [
    "JacobiParams",
    "JacobiRecurrenceRow",
    "jacobi_recurrence_row",
    "jacobi_table",
    "jacobi_eval",
    "jacobi_weight",
    "jacobi_norm",
    "jacobi_max_bound",
    "jacobi_tv_bound",
    "weighted_envelope_bound",
]


@dataclass(frozen=True)
class JacobiParams:
    """Exponent pair of the weight (1-x)^alpha (1+x)^beta."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1.0 and self.beta > -1.0):
            raise DomainError(
                f"weight exponents must exceed -1, got ({self.alpha}, {self.beta})"
            )

    @property
    def symmetric(self) -> bool:
        return self.alpha == self.beta


@dataclass(frozen=True)
class JacobiRecurrenceRow:
    """Coefficients of x P_k = alpha_k P_(k+1) + beta_k P_k + gamma_k P_(k-1)."""

    k: int
    alpha_k: float
    beta_k: float
    gamma_k: float


def jacobi_recurrence_row(params: JacobiParams, k: int) -> JacobiRecurrenceRow:
    """Recurrence row for degree k; rows are immutable and shareable."""
    if k < 0:
        raise DomainError(f"degree must be nonnegative, got {k}")
    a, b = params.alpha, params.beta
    if k == 0:
        # (2k+a+b) cancels against a factor of the numerators at k = 0;
        # the reduced forms below stay finite when a + b = 0
        return JacobiRecurrenceRow(0, 2.0 / (a + b + 2.0), (b - a) / (a + b + 2.0), 0.0)
    s = 2.0 * k + a + b
    return JacobiRecurrenceRow(
        k,
        2.0 * (k + 1.0) * (k + a + b + 1.0) / ((s + 1.0) * (s + 2.0)),
        (b * b - a * a) / (s * (s + 2.0)),
        2.0 * (k + a) * (k + b) / (s * (s + 1.0)),
    )


def jacobi_table(params: JacobiParams, n: int, x) -> np.ndarray:
    """All degrees 0..n at once; shape (n+1,) + shape(x).

    P_0 = 1 and the degree-1 seed comes from the k = 0 recurrence row, so the
    row formulas are the single source of truth.
    """
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    x = np.asarray(x, dtype=float)
    out = np.empty((n + 1,) + x.shape)
    out[0] = 1.0
    if n >= 1:
        row0 = jacobi_recurrence_row(params, 0)
        out[1] = (x - row0.beta_k) / row0.alpha_k
        for k in range(1, n):
            row = jacobi_recurrence_row(params, k)
            out[k + 1] = ((x - row.beta_k) * out[k] - row.gamma_k * out[k - 1]) / row.alpha_k
    return out


def jacobi_eval(params: JacobiParams, k: int, x, strict: bool = True):
    """P_k^(alpha,beta)(x) for x in [-1, 1].

    Outside [-1, 1] a DomainError is raised in strict mode; in lenient mode
    the recurrence extrapolates and an ExtrapolationWarning is emitted.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) > 1.0):
        if strict:
            raise DomainError("evaluation point outside [-1, 1] (use strict=False to extrapolate)")
        warnings.warn("evaluating outside [-1, 1]", ExtrapolationWarning, stacklevel=2)
    vals = jacobi_table(params, k, arr)[k]
    return float(vals) if arr.ndim == 0 else vals


def jacobi_weight(params: JacobiParams, x):
    """The weight (1-x)^alpha (1+x)^beta, vectorized."""
    x = np.asarray(x, dtype=float)
    return (1.0 - x) ** params.alpha * (1.0 + x) ** params.beta


def jacobi_norm(params: JacobiParams, k: int) -> float:
    """Closed-form weighted L2 norm (P_k, P_k).

    Equals 2^(a+b+1) Gamma(k+a+1) Gamma(k+b+1)
    / [(2k+a+b+1) k! Gamma(k+a+b+1)], evaluated in log space.
    """
    if k < 0:
        raise DomainError(f"degree must be nonnegative, got {k}")
    a, b = params.alpha, params.beta
    num = LogValue((a + b + 1.0) * math.log(2.0) + log_gamma(k + a + 1.0) + log_gamma(k + b + 1.0), 1)
    if k == 0:
        # (a+b+1) Gamma(a+b+1) = Gamma(a+b+2) avoids the sign flip when
        # -2 < a + b < -1
        den = LogValue(log_gamma(a + b + 2.0), 1)
    else:
        den = LogValue(
            math.log(2.0 * k + a + b + 1.0) + log_gamma(k + 1.0) + log_gamma(k + a + b + 1.0), 1
        )
    return (num / den).value


def _require_symmetric(params: JacobiParams, what: str) -> float:
    if not params.symmetric:
        raise UnsupportedParametersError(f"{what} is only available for alpha = beta")
    return params.alpha


def jacobi_max_bound(params: JacobiParams, k: int) -> float:
    """max over [-1, 1] of |P_k^(alpha,alpha)|, which is binom(k+alpha, k)."""
    alpha = _require_symmetric(params, "the endpoint max bound")
    if not alpha > -0.5:
        raise DomainError(f"endpoint max bound requires alpha > -1/2, got {alpha}")
    if k < 0:
        raise DomainError(f"degree must be nonnegative, got {k}")
    return log_binomial(k + alpha, k).value


def jacobi_tv_bound(params: JacobiParams, n: int) -> float:
    """Total-variation bound 2 n binom(n+alpha, n) for P_n^(alpha,alpha), alpha >= 0."""
    alpha = _require_symmetric(params, "the total-variation bound")
    if alpha < 0:
        raise DomainError(f"total-variation bound requires alpha >= 0, got {alpha}")
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    if n == 0:
        return 0.0
    return 2.0 * n * log_binomial(n + alpha, n).value


def weighted_envelope_bound(params: JacobiParams, n: int) -> float:
    """Upper bound on max |P_n^(alpha,alpha)(x) (1-x^2)^alpha| for alpha > 0.

    Two Gamma-ratio branches, one for alpha >= 1/2 and one for
    0 < alpha <= 1/2; both stem from envelope estimates of the Gegenbauer
    polynomials, and they coincide at alpha = 1/2.
    """
    alpha = _require_symmetric(params, "the weighted envelope bound")
    if not alpha > 0:
        raise UnsupportedParametersError(
            f"weighted envelope bound requires alpha > 0, got {alpha}"
        )
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    common = LogValue(
        log_gamma(2.0 * alpha + 1.0) + log_gamma(n + alpha + 1.0)
        - log_gamma(alpha + 1.0) - log_gamma(alpha + 0.5) - log_gamma(n + 2.0 * alpha + 1.0),
        1,
    )
    if alpha >= 0.5:
        branch = LogValue(log_gamma(n / 2.0 + alpha + 0.5) - log_gamma(n / 2.0 + 1.0), 1)
    else:
        branch = LogValue(log_gamma(alpha) - 0.5 * math.log(math.pi), 1)
    return (common * branch).value
