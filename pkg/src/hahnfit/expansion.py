"""Discrete inner products, Hahn coefficients, and the least-squares operator.

The least-squares projection onto polynomials of degree <= n over the
equidistant grid x_mu = -1 + 2 mu / N is computed as a truncated Hahn series:
LS[f](x) = sum_k <f, Q_k> / <Q_k, Q_k> Q_k(N (1+x) / 2).  The continuous
counterpart (truncated Jacobi series) and the pointwise/sup error functionals
live here as well.

All inner products accumulate through exactly-rounded summation; the rate
sweeps push N to ~1e6, where plain left-to-right accumulation would cost
digits the verification tolerances need.
"""

from __future__ import annotations

import math
from collections import namedtuple
from dataclasses import dataclass, field

import numpy as np

from .errors import AdmissibilityError, DegreeExceedsGridError, DomainError
from .hahn import (
    HahnContext,
    admissible_degree,
    hahn_norm,
    hahn_table,
    hahn_weight_grid,
)
from .jacobi import JacobiParams, jacobi_table
from .quadrature import jacobi_coefficient_continuous

__all__ = [
    "Grid",
    "SampledFunction",
    "CoefficientVector",
    "compensated_sum",
    "discrete_inner_product",
    "hahn_coefficients",
    "ls_evaluate",
    "jacobi_coefficients",
    "jacobi_partial_sum",
    "evaluate_jacobi_series",
    "error_bound_term",
    "ErrorPair",
    "pointwise_error_pair",
]


class Grid:
    """Equidistant nodes x_mu = -1 + 2 mu / N, mu = 0..N, paired with mu itself.

    Nodes are constructed from the closed form, never accumulated, so the
    endpoints are exactly -1 and 1 and the spacing is uniform.
    """

    __slots__ = ("N", "nodes")

    def __init__(self, N: int):
        if N != int(N) or N < 1:
            raise DomainError(f"grid size must be a positive integer, got {N}")
        self.N = int(N)
        nodes = -1.0 + 2.0 * np.arange(self.N + 1) / self.N
        nodes.flags.writeable = False
        self.nodes = nodes

    @property
    def abscissae(self) -> np.ndarray:
        """The integer abscissae 0..N as floats."""
        return np.arange(self.N + 1, dtype=float)

    def __repr__(self):
        return f"Grid(N={self.N})"


@dataclass(frozen=True)
class SampledFunction:
    """Values f(x_mu) on a grid, tagged with where they came from."""

    values: np.ndarray
    source_label: str = ""

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1:
            raise DomainError("sampled values must form a one-dimensional array")
        if not np.all(np.isfinite(values)):
            raise DomainError("sampled values must be finite")
        object.__setattr__(self, "values", values)

    @classmethod
    def sample(cls, func, grid: Grid, label: str = "") -> "SampledFunction":
        return cls(np.asarray(func(grid.nodes), dtype=float), label)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class CoefficientVector:
    """Expansion coefficients c_0..c_n of a truncated series in one family."""

    family: str
    params: object
    n: int
    coefficients: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.family not in ("hahn", "jacobi"):
            raise DomainError(f"unknown family {self.family!r}")
        coeffs = np.asarray(self.coefficients, dtype=float)
        if coeffs.shape != (self.n + 1,):
            raise DomainError(
                f"expected {self.n + 1} coefficients, got shape {coeffs.shape}"
            )
        if self.family == "hahn" and self.n > self.params.N:
            raise DegreeExceedsGridError(
                f"truncation degree {self.n} exceeds the grid degree {self.params.N}"
            )
        object.__setattr__(self, "coefficients", coeffs)


def compensated_sum(values) -> float:
    """Exactly-rounded sum of a float array (shewchuk accumulation)."""
    return math.fsum(np.asarray(values, dtype=float))


def discrete_inner_product(f: SampledFunction, g: SampledFunction, ctx: HahnContext) -> float:
    """<f, g> = sum over mu of f(mu) g(mu) w(mu) on ctx's abscissae."""
    expected = ctx.N + 1
    if len(f) != expected or len(g) != expected:
        raise ValueError(
            f"samples must have length N+1 = {expected}, got {len(f)} and {len(g)}"
        )
    return compensated_sum(f.values * g.values * hahn_weight_grid(ctx))


def hahn_coefficients(f: SampledFunction, ctx: HahnContext, n: int) -> CoefficientVector:
    """Coefficients <f, Q_k> / <Q_k, Q_k> for k = 0..n.

    The numerators are weighted sums over the integer abscissae; the
    denominators come from the closed-form norm, never from summation.
    """
    if n > ctx.N:
        raise DegreeExceedsGridError(
            f"expansion degree {n} exceeds the grid degree {ctx.N}"
        )
    if len(f) != ctx.N + 1:
        raise ValueError(f"samples must have length N+1 = {ctx.N + 1}, got {len(f)}")
    w = hahn_weight_grid(ctx)
    table = hahn_table(ctx, n, np.arange(ctx.N + 1, dtype=float))
    wf = w * f.values
    coeffs = np.array(
        [compensated_sum(wf * table[k]) / hahn_norm(ctx, k) for k in range(n + 1)]
    )
    return CoefficientVector("hahn", ctx, n, coeffs)


def ls_evaluate(coeffs: CoefficientVector, ctx: HahnContext, x):
    """Least-squares value sum_k c_k Q_k(N (1+x) / 2) at x in [-1, 1]."""
    if coeffs.family != "hahn":
        raise DomainError("ls_evaluate needs Hahn-family coefficients")
    if coeffs.params != ctx:
        raise ValueError("coefficient vector was built on a different context")
    arr = np.asarray(x, dtype=float)
    table = hahn_table(ctx, coeffs.n, ctx.N * (1.0 + arr) / 2.0)
    vals = np.tensordot(coeffs.coefficients, table, axes=1)
    return float(vals) if arr.ndim == 0 else vals


def jacobi_coefficients(u, params: JacobiParams, n: int) -> CoefficientVector:
    """Continuous coefficients (u, P_k) / (P_k, P_k) for k = 0..n."""
    coeffs = np.array(
        [jacobi_coefficient_continuous(u, params, k) for k in range(n + 1)]
    )
    return CoefficientVector("jacobi", params, n, coeffs)


def jacobi_partial_sum(u, params: JacobiParams, n: int, x):
    """Truncated Jacobi series of u, evaluated at x.

    Quadrature accuracy warnings from the coefficient integrals propagate.
    """
    return evaluate_jacobi_series(jacobi_coefficients(u, params, n), x)


def evaluate_jacobi_series(coeffs: CoefficientVector, x):
    """sum_k c_k P_k(x) for a Jacobi-family coefficient vector."""
    if coeffs.family != "jacobi":
        raise DomainError("expected Jacobi-family coefficients")
    arr = np.asarray(x, dtype=float)
    table = jacobi_table(coeffs.params, coeffs.n, arr)
    vals = np.tensordot(coeffs.coefficients, table, axes=1)
    return float(vals) if arr.ndim == 0 else vals


def error_bound_term(alpha: float, n: int, N: int) -> float:
    """The rate term n^(3 + alpha + max(1, alpha)) / N; n^4 / N at alpha = 0."""
    return float(n) ** (3.0 + alpha + max(1.0, alpha)) / float(N)


ErrorPair = namedtuple("ErrorPair", ["sup_hahn_err", "sup_jacobi_err", "bound_term"])


def pointwise_error_pair(u, ctx: HahnContext, n: int, strict: bool = True) -> ErrorPair:
    """Sup-over-grid errors of both truncated expansions, plus the rate term.

    Returns (sup |u - LS_n|, sup |u - Jacobi partial sum|, bound term), the
    sups taken over the N+1 grid nodes.  In strict mode the degree must not
    exceed the admissibility threshold; the verification suites switch strict
    off to probe the boundary.
    """
    if strict and n > admissible_degree(ctx.alpha, ctx.N):
        raise AdmissibilityError(
            f"degree {n} exceeds the admissible bound "
            f"{admissible_degree(ctx.alpha, ctx.N):.3f} for (alpha={ctx.alpha}, N={ctx.N})"
        )
    grid = Grid(ctx.N)
    f = SampledFunction.sample(u, grid)
    coeffs = hahn_coefficients(f, ctx, n)
    # evaluate at the integer abscissae directly: the grid map sends node mu
    # exactly to mu, so no affine round trip is needed
    qtable = hahn_table(ctx, n, grid.abscissae)
    ls_vals = np.tensordot(coeffs.coefficients, qtable, axes=1)
    sup_hahn = float(np.max(np.abs(f.values - ls_vals)))
    del qtable
    jac = evaluate_jacobi_series(
        jacobi_coefficients(u, ctx.jacobi_params, n), grid.nodes
    )
    sup_jacobi = float(np.max(np.abs(f.values - jac)))
    return ErrorPair(sup_hahn, sup_jacobi, error_bound_term(ctx.alpha, n, ctx.N))
