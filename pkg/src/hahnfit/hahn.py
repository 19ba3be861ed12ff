"""Hahn polynomials Q_k(x; alpha, beta, N) on the integer abscissae 0..N.

The family is finite (degrees 0..N), orthogonal under the discrete inner
product sum_i f(i) g(i) w(i) with the binomial-product weight w.  Forward
recurrence in k is used for evaluation; the admissible-degree threshold
n(alpha, N) marks the range on which |Q_n| <= 1 holds uniformly on [0, N].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from .errors import (
    DegenerateRecurrenceError,
    DomainError,
    FamilyExhaustedError,
    UnsupportedParametersError,
)
from .jacobi import JacobiParams, jacobi_norm
from .special import LogValue, log_binomial, log_gamma, pochhammer

__all__ = [
    "HahnContext",
    "HahnRecurrenceRow",
    "hahn_recurrence_row",
    "hahn_table",
    "hahn_eval",
    "hahn_weight",
    "hahn_weight_grid",
    "admissible_degree",
    "hahn_norm",
    "normalized_hahn_eval",
    "norm_ratio_identity_check",
    "weight_ratio_check",
]


@dataclass(frozen=True)
class HahnContext:
    """Parameters (alpha, beta, N) fixing one discrete family and its grid."""

    alpha: float
    beta: float
    N: int

    def __post_init__(self):
        if not (self.alpha > -1.0 and self.beta > -1.0):
            raise DomainError(
                f"weight exponents must exceed -1, got ({self.alpha}, {self.beta})"
            )
        if self.N != int(self.N) or self.N < 1:
            raise DomainError(f"N must be a positive integer, got {self.N}")
        object.__setattr__(self, "N", int(self.N))

    @property
    def symmetric(self) -> bool:
        return self.alpha == self.beta

    @property
    def jacobi_params(self) -> JacobiParams:
        return JacobiParams(self.alpha, self.beta)


@dataclass(frozen=True)
class HahnRecurrenceRow:
    """Coefficients of -x Q_k = A_k Q_(k+1) - (A_k + C_k) Q_k + C_k Q_(k-1)."""

    k: int
    A_k: float
    C_k: float


def hahn_recurrence_row(ctx: HahnContext, k: int) -> HahnRecurrenceRow:
    if k < 0:
        raise DomainError(f"degree must be nonnegative, got {k}")
    a, b, N = ctx.alpha, ctx.beta, ctx.N
    if k == 0:
        # the (a+b+1) factor cancels at k = 0; C_0 is an empty product
        return HahnRecurrenceRow(0, (a + 1.0) * N / (a + b + 2.0), 0.0)
    s = 2.0 * k + a + b
    A = (k + a + b + 1.0) * (k + a + 1.0) * (N - k) / ((s + 1.0) * (s + 2.0))
    C = k * (k + a + b + N + 1.0) * (k + b) / (s * (s + 1.0))
    return HahnRecurrenceRow(k, A, C)


def hahn_table(ctx: HahnContext, n: int, x) -> np.ndarray:
    """Q_k(x) for all k = 0..n; shape (n+1,) + shape(x).

    x may be real (the composition with the affine grid map needs non-integer
    arguments); the recurrence is polynomial in x, so nothing special happens
    off the integers.
    """
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    if n > ctx.N:
        raise FamilyExhaustedError(
            f"the family has degrees 0..{ctx.N} only, requested {n}"
        )
    x = np.asarray(x, dtype=float)
    out = np.empty((n + 1,) + x.shape)
    out[0] = 1.0
    # Q_(k+1) = [(A_k + C_k - x) Q_k - C_k Q_(k-1)] / A_k with Q_(-1) = 0
    for k in range(n):
        row = hahn_recurrence_row(ctx, k)
        if row.A_k == 0.0:
            raise DegenerateRecurrenceError(f"A_{k} = 0, cannot advance the recurrence")
        if k == 0:
            out[1] = (row.A_k - x) / row.A_k
        else:
            out[k + 1] = ((row.A_k + row.C_k - x) * out[k] - row.C_k * out[k - 1]) / row.A_k
    return out


def hahn_eval(ctx: HahnContext, k: int, x):
    """Q_k(x; alpha, beta, N); x scalar or array, natural domain [0, N]."""
    arr = np.asarray(x, dtype=float)
    vals = hahn_table(ctx, k, arr)[k]
    return float(vals) if arr.ndim == 0 else vals


def hahn_weight(ctx: HahnContext, x: int) -> LogValue:
    """Weight w(x) = binom(alpha+x, x) binom(beta+N-x, N-x) at an integer abscissa."""
    if x != int(x):
        raise DomainError(f"weight abscissa must be an integer, got {x}")
    x = int(x)
    if not 0 <= x <= ctx.N:
        raise DomainError(f"weight abscissa must lie in 0..{ctx.N}, got {x}")
    return log_binomial(ctx.alpha + x, x) * log_binomial(ctx.beta + ctx.N - x, ctx.N - x)


@lru_cache(maxsize=64)
def hahn_weight_grid(ctx: HahnContext) -> np.ndarray:
    """w at all abscissae 0..N as a read-only float array."""
    a, b, N = ctx.alpha, ctx.beta, ctx.N
    if a == 0.0 and b == 0.0:
        w = np.ones(N + 1)
    else:
        mu = np.arange(N + 1, dtype=float)
        lw = (
            gammaln(a + mu + 1.0) - gammaln(mu + 1.0) - gammaln(a + 1.0)
            + gammaln(b + N - mu + 1.0) - gammaln(N - mu + 1.0) - gammaln(b + 1.0)
        )
        w = np.exp(lw)
    w.flags.writeable = False
    return w


def admissible_degree(alpha: float, N: int) -> float:
    """Degree threshold 1/2 - alpha + sqrt((2 alpha + 1)(2 alpha + 2 N + 1)) / 2.

    Below this real bound, |Q_n(x; alpha, alpha, N)| <= 1 on all of [0, N].
    Callers floor it when they need the largest admissible integer degree.
    """
    if not alpha > -0.5:
        raise DomainError(f"admissible degree requires alpha > -1/2, got {alpha}")
    return 0.5 - alpha + 0.5 * math.sqrt((2.0 * alpha + 1.0) * (2.0 * alpha + 2.0 * N + 1.0))


def _hahn_norm_logvalue(ctx: HahnContext, k: int) -> LogValue:
    # (-1)^k (k+a+b+1)_(N+1) (b+1)_k k! / [(2k+a+b+1) (a+1)_k (-N)_k N!];
    # the sign of (-N)_k cancels the (-1)^k prefactor
    a, b, N = ctx.alpha, ctx.beta, ctx.N
    sign = LogValue(0.0, -1 if k % 2 else 1)
    num = (
        pochhammer(k + a + b + 1.0, N + 1)
        * pochhammer(b + 1.0, k)
        * LogValue(log_gamma(k + 1.0), 1)
    )
    den = (
        LogValue.from_float(2.0 * k + a + b + 1.0)
        * pochhammer(a + 1.0, k)
        * pochhammer(-float(N), k)
        * LogValue(log_gamma(N + 1.0), 1)
    )
    return sign * num / den


def hahn_norm(ctx: HahnContext, k: int) -> float:
    """Closed-form discrete norm <Q_k, Q_k>, evaluated in log space."""
    if k < 0:
        raise DomainError(f"degree must be nonnegative, got {k}")
    if k > ctx.N:
        raise FamilyExhaustedError(f"the family has degrees 0..{ctx.N} only, requested {k}")
    return _hahn_norm_logvalue(ctx, k).value


def normalized_hahn_eval(ctx: HahnContext, k: int, t):
    """(-1)^k binom(k+alpha, k) Q_k(N (1+t)/2) for alpha = beta.

    This normalization matches the Jacobi scale: the result converges to
    P_k^(alpha,alpha)(t) as N grows with k fixed.
    """
    if not ctx.symmetric:
        raise UnsupportedParametersError(
            "the Jacobi-normalized variant is defined for alpha = beta only"
        )
    arr = np.asarray(t, dtype=float)
    scale = log_binomial(k + ctx.alpha, k).value * (-1.0 if k % 2 else 1.0)
    vals = scale * hahn_table(ctx, k, ctx.N * (1.0 + arr) / 2.0)[k]
    return float(vals) if arr.ndim == 0 else vals


def norm_ratio_identity_check(ctx: HahnContext, k: int) -> float:
    """Relative discrepancy of the exact norm-ratio identity.

    <Q_k, Q_k> equals (P_k, P_k) times
    k!^2 Gamma(k+a+b+2+N) Gamma(a+1) (N-k)!
    / [Gamma(b+1) Gamma(1+a+k)^2 N!^2 2^(a+b+1)];
    both sides are assembled in log space and the relative gap is returned.
    """
    if not 0 <= k <= ctx.N:
        raise DomainError(f"degree must lie in 0..{ctx.N}, got {k}")
    a, b, N = ctx.alpha, ctx.beta, ctx.N
    lhs = _hahn_norm_logvalue(ctx, k)
    ratio = LogValue(
        2.0 * log_gamma(k + 1.0)
        + log_gamma(k + a + b + 2.0 + N)
        + log_gamma(a + 1.0)
        + log_gamma(N - k + 1.0)
        - log_gamma(b + 1.0)
        - 2.0 * log_gamma(1.0 + a + k)
        - 2.0 * log_gamma(N + 1.0)
        - (a + b + 1.0) * math.log(2.0),
        1,
    )
    rhs = ratio * LogValue.from_float(jacobi_norm(ctx.jacobi_params, k))
    if lhs.sign != rhs.sign:
        return math.inf
    return abs(math.expm1(lhs.log_magnitude - rhs.log_magnitude))


def weight_ratio_check(ctx: HahnContext, t: float) -> float:
    """Diagnostic ratio w(N(1+t)/2) 2^(2 alpha) Gamma(alpha+1)^2 / (N^(2 alpha) rho(t)).

    Defined for alpha = beta >= 0 and t strictly inside (-1, 1); the weight is
    evaluated at the real-valued mapped abscissa through log-gamma.  The ratio
    tends to 1 as N grows (identically 1 at alpha = 0).
    """
    if not ctx.symmetric:
        raise UnsupportedParametersError("the weight ratio is defined for alpha = beta only")
    alpha, N = ctx.alpha, ctx.N
    if alpha < 0:
        raise UnsupportedParametersError(f"the weight ratio requires alpha >= 0, got {alpha}")
    if not -1.0 < t < 1.0:
        raise DomainError(f"t must lie strictly inside (-1, 1), got {t}")
    x = N * (1.0 + t) / 2.0
    log_w = (
        log_gamma(alpha + x + 1.0) - log_gamma(x + 1.0) - log_gamma(alpha + 1.0)
        + log_gamma(alpha + N - x + 1.0) - log_gamma(N - x + 1.0) - log_gamma(alpha + 1.0)
    )
    log_rho = alpha * math.log1p(-t) + alpha * math.log1p(t)
    return math.exp(
        log_w
        + 2.0 * alpha * math.log(2.0)
        + 2.0 * log_gamma(alpha + 1.0)
        - 2.0 * alpha * math.log(N)
        - log_rho
    )
