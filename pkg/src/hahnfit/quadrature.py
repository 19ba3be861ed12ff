"""Continuous inner products on [-1, 1] and the composite trapezoid rule.

Gauss-Legendre nodes and weights are generated by Newton iteration on the
Legendre recurrence (no table dependency); coefficient integrals refine by
node doubling.  The trapezoid rule uses half-weighted endpoints, which is the
variant whose error is bounded by total variation / N; the discrete inner
product with full endpoint weights is a different operator and lives in the
expansion module.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, QuadratureAccuracyWarning
from .jacobi import JacobiParams, jacobi_norm, jacobi_table, jacobi_weight

__all__ = [
    "QuadratureSpec",
    "GAUSS_NODE_CAP",
    "gauss_legendre_nodes",
    "gauss_legendre_integrate",
    "trapezoid_integrate",
    "integrate",
    "jacobi_coefficient_continuous",
]

GAUSS_NODE_CAP = 2 ** 14
_NEWTON_TOL = 1e-14


@dataclass(frozen=True)
class QuadratureSpec:
    """Method selector plus refinement parameters for `integrate`."""

    method: str
    node_count: int
    refinement_tolerance: float = 1e-12

    def __post_init__(self):
        if self.method not in ("gauss_legendre", "trapezoid"):
            raise DomainError(f"unknown quadrature method {self.method!r}")
        if self.method == "gauss_legendre" and self.node_count < 2:
            raise DomainError("gauss_legendre needs node_count >= 2")
        if self.method == "trapezoid" and self.node_count < 1:
            raise DomainError("trapezoid needs node_count >= 1")


def _legendre_pair(m: int, x: np.ndarray):
    """P_m and P_(m-1) at x by the standard recurrence."""
    pkm1 = np.ones_like(x)
    if m == 0:
        return pkm1, np.zeros_like(x)
    pk = x.copy()
    for j in range(1, m):
        pkm1, pk = pk, ((2.0 * j + 1.0) * x * pk - j * pkm1) / (j + 1.0)
    return pk, pkm1


@lru_cache(maxsize=32)
def gauss_legendre_nodes(node_count: int):
    """Nodes (ascending) and weights of the m-point Gauss-Legendre rule.

    Roots of P_m found by Newton iteration from the Chebyshev-like initial
    guesses cos(pi (4i+3) / (4m+2)), with P'_m from the recurrence pair;
    converges in two or three sweeps to 1e-14.  The returned arrays are
    read-only so the cache can be shared freely.
    """
    m = node_count
    if m < 1:
        raise DomainError(f"node count must be positive, got {m}")
    if m == 1:
        x = np.zeros(1)
        w = np.full(1, 2.0)
    else:
        i = np.arange(m // 2)
        half = np.cos(math.pi * (4.0 * i + 3.0) / (4.0 * m + 2.0))  # descending, all > 0
        for _ in range(50):
            pm, pm1 = _legendre_pair(m, half)
            dpm = m * (half * pm - pm1) / (half * half - 1.0)
            step = pm / dpm
            half -= step
            if np.max(np.abs(step)) < _NEWTON_TOL:
                break
        else:
            raise RuntimeError("Newton iteration for Gauss-Legendre nodes did not converge")
        pm, pm1 = _legendre_pair(m, half)
        dpm = m * (half * pm - pm1) / (half * half - 1.0)
        whalf = 2.0 / ((1.0 - half * half) * dpm * dpm)
        if m % 2:
            zero = np.zeros(1)
            pm0, pm10 = _legendre_pair(m, zero)
            dp0 = m * (zero * pm0 - pm10) / (zero * zero - 1.0)
            x = np.concatenate([-half, zero, half[::-1]])
            w = np.concatenate([whalf, 2.0 / (dp0 * dp0), whalf[::-1]])
        else:
            x = np.concatenate([-half, half[::-1]])
            w = np.concatenate([whalf, whalf[::-1]])
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def gauss_legendre_integrate(f, node_count: int) -> float:
    """Integral of f over [-1, 1]; exact for polynomials of degree <= 2m - 1.

    f must accept an ndarray of evaluation points.
    """
    x, w = gauss_legendre_nodes(node_count)
    return float(np.sum(w * np.asarray(f(x), dtype=float)))


def trapezoid_integrate(f, N: int) -> float:
    """Composite trapezoid rule on the N+1 equidistant nodes of [-1, 1].

    (2/N) sum of the interior values plus (1/N)(f(-1) + f(1)); for f of
    bounded variation the error is at most V[f] / N.
    """
    if N < 1:
        raise DomainError(f"trapezoid rule needs N >= 1, got {N}")
    nodes = -1.0 + 2.0 * np.arange(N + 1) / N
    vals = np.asarray(f(nodes), dtype=float)
    return float((2.0 * math.fsum(vals[1:-1]) + vals[0] + vals[-1]) / N)


def integrate(f, spec: QuadratureSpec) -> float:
    """Dispatch on a QuadratureSpec."""
    if spec.method == "gauss_legendre":
        return gauss_legendre_integrate(f, spec.node_count)
    return trapezoid_integrate(f, spec.node_count)


def _refine_gauss(integrand, rtol: float, start: int = 32, cap: int = GAUSS_NODE_CAP):
    """Node-doubling Gauss-Legendre refinement.

    Stops when consecutive levels agree to rtol relative (with an absolute
    floor at magnitude 1 so exactly-vanishing integrals terminate); returns
    (value, converged).
    """
    prev = gauss_legendre_integrate(integrand, start)
    m = 2 * start
    while m <= cap:
        cur = gauss_legendre_integrate(integrand, m)
        if abs(cur - prev) <= rtol * max(1.0, abs(cur)):
            return cur, True
        prev = cur
        m *= 2
    return prev, False


def jacobi_coefficient_continuous(u, params: JacobiParams, k: int, rtol: float = 1e-12) -> float:
    """Continuous expansion coefficient (u, P_k) / (P_k, P_k).

    The weight is folded into the integrand and the Gauss rule is doubled
    until the integral settles to rtol (node cap 2^14).  Non-convergence at
    the cap emits a QuadratureAccuracyWarning; the capped value is still
    returned.
    """
    def integrand(x):
        return np.asarray(u(x), dtype=float) * jacobi_table(params, k, x)[k] * jacobi_weight(params, x)

    value, converged = _refine_gauss(integrand, rtol)
    if not converged:
        warnings.warn(
            f"coefficient integral for degree {k} did not settle to {rtol:g} "
            f"within {GAUSS_NODE_CAP} nodes",
            QuadratureAccuracyWarning,
            stacklevel=2,
        )
    return value / jacobi_norm(params, k)
