"""Brute-force weighted least-squares solver, independent of the Hahn route.

Fits by modified Gram-Schmidt orthogonalization of a Legendre-at-node design
matrix under the discrete weighted inner product.  Exists to cross-validate
the spectral (Hahn coefficient) route; it deliberately shares no polynomial
code with the rest of the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConditioningError, DegreeExceedsGridError
from .expansion import Grid, SampledFunction
from .hahn import HahnContext, hahn_weight_grid

__all__ = ["DesignMatrix", "build_design_matrix", "oracle_fit", "residual_norm"]

_PIVOT_RTOL = 1e-12


@dataclass(frozen=True)
class DesignMatrix:
    """Grid nodes, basis columns (degree 0..n at the nodes), and weights."""

    nodes: np.ndarray
    columns: np.ndarray
    weights: np.ndarray


def _legendre_columns(nodes: np.ndarray, n: int) -> np.ndarray:
    # local recurrence on purpose: the oracle must not lean on the modules
    # it is checking
    cols = np.empty((nodes.size, n + 1))
    cols[:, 0] = 1.0
    if n >= 1:
        cols[:, 1] = nodes
        for k in range(1, n):
            cols[:, k + 1] = (
                (2.0 * k + 1.0) * nodes * cols[:, k] - k * cols[:, k - 1]
            ) / (k + 1.0)
    return cols


def build_design_matrix(ctx: HahnContext, n: int) -> DesignMatrix:
    """Legendre-evaluated columns at the grid nodes with the discrete weights.

    Legendre columns instead of monomials: a monomial Vandermonde is
    numerically singular long before n = 15.
    """
    if n > ctx.N:
        raise DegreeExceedsGridError(f"degree {n} exceeds the grid degree {ctx.N}")
    grid = Grid(ctx.N)
    return DesignMatrix(grid.nodes, _legendre_columns(grid.nodes, n), np.asarray(hahn_weight_grid(ctx)))


def oracle_fit(f: SampledFunction, ctx: HahnContext, n: int) -> np.ndarray:
    """Values of the weighted least-squares polynomial at all grid nodes.

    Modified Gram-Schmidt with one reorthogonalization pass under the
    weighted inner product; a pivot below 1e-12 of the original column norm
    raises ConditioningError.
    """
    design = build_design_matrix(ctx, n)
    if len(f) != ctx.N + 1:
        raise ValueError(f"samples must have length N+1 = {ctx.N + 1}, got {len(f)}")
    w = design.weights
    basis = np.empty_like(design.columns)
    for j in range(n + 1):
        v = design.columns[:, j].copy()
        original_norm = math.sqrt(np.sum(w * v * v))
        for _ in range(2):
            for i in range(j):
                v -= np.sum(w * basis[:, i] * v) * basis[:, i]
        norm = math.sqrt(np.sum(w * v * v))
        if norm < _PIVOT_RTOL * original_norm:
            raise ConditioningError(
                f"column {j} collapsed during orthogonalization "
                f"(pivot {norm:.3e} vs original {original_norm:.3e})"
            )
        basis[:, j] = v / norm
    fitted = np.zeros(ctx.N + 1)
    for j in range(n + 1):
        fitted += np.sum(w * basis[:, j] * f.values) * basis[:, j]
    return fitted


def residual_norm(f: SampledFunction, fitted: np.ndarray, ctx: HahnContext) -> float:
    """Weighted residual norm sqrt(sum w (f - fitted)^2)."""
    fitted = np.asarray(fitted, dtype=float)
    if len(f) != fitted.size or len(f) != ctx.N + 1:
        raise ValueError("sample, fit, and grid sizes must all agree")
    r = f.values - fitted
    return math.sqrt(np.sum(hahn_weight_grid(ctx) * r * r))
