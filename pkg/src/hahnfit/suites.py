"""Verification suites and convergence sweeps behind the command line driver.

Every suite returns a JSON-friendly report dict: the suite name, an overall
pass flag, and one record per individual check.  Randomized suites take a
seed and are reproducible given it.
"""

from __future__ import annotations

import math
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement

import numpy as np

from .errors import QuadratureAccuracyWarning
from .expansion import (
    Grid,
    SampledFunction,
    compensated_sum,
    hahn_coefficients,
    pointwise_error_pair,
)
from .hahn import (
    HahnContext,
    admissible_degree,
    hahn_norm,
    hahn_table,
    hahn_weight_grid,
    norm_ratio_identity_check,
    normalized_hahn_eval,
)
from .jacobi import (
    JacobiParams,
    jacobi_eval,
    jacobi_tv_bound,
    jacobi_weight,
    weighted_envelope_bound,
)
from .oracle import oracle_fit
from .quadrature import trapezoid_integrate
from .registry import REGISTRY
from .variation import product_bound_check, tv_estimate

__all__ = [
    "SUITE_NAMES",
    "run_suite",
    "ConvergenceRecord",
    "doubling_degrees",
    "resolve_schedule",
    "sweep_cell",
    "convergence_sweep",
    "decomposition_constant",
]

PARAMETER_PAIRS = [(0.0, 0.0), (1.0, 1.0), (0.5, 0.5), (1.0, 2.0)]
SYMMETRIC_ALPHAS = [0.0, 0.5, 1.0, 2.0]
BOUNDEDNESS_SIZES = [40, 100, 400]
LIMIT_RATE_SIZES = [200, 400, 800, 1600]
_ZERO_FLOOR = 1e-12  # sup differences below this are numerical zero


def _report(suite, checks, extra=None):
    report = {"suite": suite, "passed": all(c["passed"] for c in checks), "checks": checks}
    if extra:
        report.update(extra)
    return report


def orthogonality_suite(seed=None):
    """Discrete orthogonality and closed-form norms against brute-force sums."""
    checks = []
    for alpha, beta in PARAMETER_PAIRS:
        ctx = HahnContext(alpha, beta, 60)
        w = hahn_weight_grid(ctx)
        table = hahn_table(ctx, 12, np.arange(ctx.N + 1, dtype=float))
        norms = [hahn_norm(ctx, k) for k in range(13)]
        max_offdiag = 0.0
        for k in range(13):
            for j in range(k):
                ip = compensated_sum(w * table[j] * table[k])
                max_offdiag = max(max_offdiag, abs(ip) / math.sqrt(norms[j] * norms[k]))
        max_norm_err = max(
            abs(compensated_sum(w * table[k] * table[k]) - norms[k]) / norms[k]
            for k in range(13)
        )
        checks.append({
            "alpha": alpha, "beta": beta, "N": ctx.N,
            "max_offdiagonal_rel": max_offdiag,
            "max_norm_rel_err": max_norm_err,
            "passed": max_offdiag <= 1e-9 and max_norm_err <= 1e-9,
        })
    return _report("orthogonality", checks)


def boundedness_suite(seed=None):
    """Uniform bound max |Q_n| = 1 up to the admissible degree, and its failure beyond.

    For admissible degrees the max over the integer abscissae must equal 1 to
    1e-10.  Three degrees past the (ceiled) threshold the max over the whole
    interval [0, N], sampled at 64 points per unit step, must exceed 1 for at
    least one parameter combination; between the integers is where the bound
    breaks first.
    """
    checks = []
    any_overshoot = False
    for alpha in SYMMETRIC_ALPHAS:
        for N in BOUNDEDNESS_SIZES:
            ctx = HahnContext(alpha, alpha, N)
            bound = admissible_degree(alpha, N)
            n_top = math.floor(bound)
            table = hahn_table(ctx, n_top, np.arange(N + 1, dtype=float))
            for n in range(n_top + 1):
                grid_max = float(np.max(np.abs(table[n])))
                checks.append({
                    "kind": "admissible", "alpha": alpha, "N": N, "n": n,
                    "grid_max": grid_max,
                    "passed": abs(grid_max - 1.0) <= 1e-10,
                })
            n_over = math.ceil(bound) + 3
            fine = np.linspace(0.0, N, 64 * N + 1)
            interval_max = float(np.max(np.abs(hahn_table(ctx, n_over, fine)[n_over])))
            exceeded = interval_max > 1.0 + 1e-10
            any_overshoot = any_overshoot or exceeded
            checks.append({
                "kind": "overshoot", "alpha": alpha, "N": N, "n": n_over,
                "interval_max": interval_max, "exceeds_one": exceeded,
                "passed": True,  # aggregated below: at least one must exceed
            })
    checks.append({"kind": "overshoot_somewhere", "passed": any_overshoot})
    return _report("boundedness", checks)


def norm_identity_suite(seed=None):
    """Exact discrete/continuous norm-ratio identity, degree by degree."""
    checks = []
    for alpha, beta in PARAMETER_PAIRS:
        ctx = HahnContext(alpha, beta, 60)
        worst = max(norm_ratio_identity_check(ctx, k) for k in range(13))
        checks.append({
            "alpha": alpha, "beta": beta, "N": ctx.N, "max_degree": 12,
            "max_rel_discrepancy": worst,
            "passed": worst <= 1e-9,
        })
    return _report("norm_identity", checks)


def limit_rate_suite(seed=None):
    """O(1/N) approach of the normalized discrete polynomials to the Jacobi ones.

    For each fixed degree the sup gap over the grid is measured across a
    geometric ladder of N and the log-log slope against 1/N must land in
    [0.8, 1.2].  A gap that is numerically zero at every N (degree 1 maps
    exactly) satisfies the rate trivially and is recorded with slope None.
    """
    checks = []
    params = JacobiParams(0.0, 0.0)
    for n in range(1, 6):
        sups = []
        for N in LIMIT_RATE_SIZES:
            grid = Grid(N)
            ctx = HahnContext(0.0, 0.0, N)
            diff = normalized_hahn_eval(ctx, n, grid.nodes) - jacobi_eval(params, n, grid.nodes)
            sups.append(float(np.max(np.abs(diff))))
        if max(sups) < _ZERO_FLOOR:
            checks.append({
                "n": n, "sup_gaps": sups, "slope": None,
                "identically_zero": True, "passed": True,
            })
            continue
        slope = float(np.polyfit(np.log(1.0 / np.asarray(LIMIT_RATE_SIZES, float)),
                                 np.log(sups), 1)[0])
        checks.append({
            "n": n, "sup_gaps": sups, "slope": slope,
            "identically_zero": False, "passed": 0.8 <= slope <= 1.2,
        })
    return _report("limit_rate", checks)


def oracle_suite(seed=0):
    """Spectral route against the Gram-Schmidt solver on seeded random fits."""
    rng = np.random.default_rng(seed)
    checks = []
    for i in range(20):
        alpha, beta = PARAMETER_PAIRS[i % len(PARAMETER_PAIRS)]
        n = int(rng.integers(1, 11))
        N = int(rng.integers(max(20, n + 1), 201))
        ctx = HahnContext(alpha, beta, N)
        grid = Grid(N)
        coeffs = rng.standard_normal(n + 1)
        base = np.polynomial.legendre.legval(grid.nodes, coeffs)
        noisy = base + rng.uniform(-1e-3, 1e-3, N + 1)
        f = SampledFunction(noisy, "random-instance")
        spectral = hahn_coefficients(f, ctx, n)
        ls_vals = np.tensordot(spectral.coefficients,
                               hahn_table(ctx, n, grid.abscissae), axes=1)
        fitted = oracle_fit(f, ctx, n)
        rel = float(np.max(np.abs(ls_vals - fitted)) / (1.0 + np.max(np.abs(noisy))))
        checks.append({
            "instance": i, "alpha": alpha, "beta": beta, "n": n, "N": N,
            "rel_gap": rel, "passed": rel <= 1e-8,
        })
    return _report("oracle", checks, extra={"seed": seed})


def tv_bounds_suite(seed=None):
    """Variation bounds: Legendre TV, the product rule, weighted envelopes."""
    checks = []
    legendre = JacobiParams(0.0, 0.0)
    for n in range(13):
        est = tv_estimate(lambda x, _n=n: jacobi_eval(legendre, _n, x), 100_001)
        bound = jacobi_tv_bound(legendre, n)
        checks.append({
            "kind": "legendre_tv", "n": n, "measured": est.value, "bound": bound,
            "converged": est.converged,
            "passed": est.converged and est.value <= bound + 1e-9,
        })
    named = {
        "x": lambda x: np.asarray(x, float),
        "x^2": lambda x: np.asarray(x, float) ** 2,
        "P_2": lambda x: jacobi_eval(legendre, 2, x),
        "|x|": lambda x: np.abs(np.asarray(x, float)),
    }
    for (fname, f), (gname, g) in combinations_with_replacement(named.items(), 2):
        measured, bound, conclusive = product_bound_check(f, g, 100_001)
        checks.append({
            "kind": "product_bound", "f": fname, "g": gname,
            "measured": measured, "bound": bound, "conclusive": conclusive,
            "passed": conclusive and measured <= bound * (1.0 + 1e-3),
        })
    for alpha in (0.5, 1.0):
        params = JacobiParams(alpha, alpha)
        for n in range(11):
            est = tv_estimate(
                lambda x, _n=n: jacobi_eval(params, _n, x) * jacobi_weight(params, x),
                100_001,
            )
            bound = 2.0 * (n + 1) * weighted_envelope_bound(params, n)
            checks.append({
                "kind": "weighted_tv", "alpha": alpha, "n": n,
                "measured": est.value, "bound": bound, "converged": est.converged,
                "passed": est.converged and est.value <= bound * (1.0 + 1e-9),
            })
    return _report("tv_bounds", checks)


def trapezoid_suite(seed=None):
    """Trapezoid error against the variation/N bound for the whole registry."""
    checks = []
    sizes = [10, 100, 1000, 10000]
    for name, tf in sorted(REGISTRY.items()):
        if tf.known_tv is None or tf.known_integral is None:
            continue
        for N in sizes:
            gap = abs(tf.known_integral - trapezoid_integrate(tf, N))
            bound = tf.known_tv / N
            checks.append({
                "kind": "bv_bound", "func": name, "N": N, "gap": gap, "bound": bound,
                "passed": gap <= bound + 1e-15,
            })
    # odd N puts the kink of |x| between nodes; the bound must still hold
    absx = REGISTRY["absx"]
    for N in (11, 101, 1001, 9999):
        gap = abs(absx.known_integral - trapezoid_integrate(absx, N))
        bound = absx.known_tv / N
        checks.append({
            "kind": "absx_odd_N", "func": "absx", "N": N, "gap": gap, "bound": bound,
            "passed": gap <= bound + 1e-15,
        })
    return _report("trapezoid", checks)


_SUITES = {
    "orthogonality": orthogonality_suite,
    "boundedness": boundedness_suite,
    "norm_identity": norm_identity_suite,
    "limit_rate": limit_rate_suite,
    "oracle": oracle_suite,
    "tv_bounds": tv_bounds_suite,
    "trapezoid": trapezoid_suite,
}

SUITE_NAMES = sorted(_SUITES)


def run_suite(name: str, seed: int = 0) -> dict:
    """Run one named verification suite and return its report."""
    if name not in _SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    if name == "oracle":
        return _SUITES[name](seed=seed)
    return _SUITES[name]()


# --- convergence sweeps -----------------------------------------------------


@dataclass(frozen=True)
class ConvergenceRecord:
    """One sweep cell: truncation degree, grid size, and the measured errors."""

    n: int
    N: int
    alpha: float
    sup_err_hahn: float
    sup_err_jacobi: float
    bound_term: float
    wall_time_ms: float

    def as_dict(self):
        return asdict(self)


CSV_COLUMNS = ["n", "N", "alpha", "sup_err_hahn", "sup_err_jacobi", "bound_term", "wall_time_ms"]


def doubling_degrees(n_max: int) -> list[int]:
    """Degrees 2, 4, 8, ... up to n_max.

    Doubling keeps the sup errors strictly ordered for odd and even test
    functions alike (consecutive degrees can tie when parity zeroes a
    coefficient).
    """
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    degrees = [2]
    while degrees[-1] * 2 <= n_max:
        degrees.append(degrees[-1] * 2)
    return degrees


def resolve_schedule(schedule: str, degrees: list[int]) -> list[int]:
    """Grid sizes for each degree under a schedule spec.

    pow:p gives N = n^p, fixed_ratio:r gives N = ceil(r n), and
    list:N1,N2,... pairs explicit sizes with the degrees.
    """
    kind, _, arg = schedule.partition(":")
    if kind == "pow":
        p = float(arg)
        return [int(round(n ** p)) for n in degrees]
    if kind == "fixed_ratio":
        r = float(arg)
        return [max(n, math.ceil(r * n)) for n in degrees]
    if kind == "list":
        sizes = [int(part) for part in arg.split(",") if part.strip() != ""]
        if len(sizes) != len(degrees):
            raise ValueError(
                f"explicit list has {len(sizes)} sizes for {len(degrees)} degrees"
            )
        return sizes
    raise ValueError(f"unknown schedule {schedule!r} (want pow:, fixed_ratio:, or list:)")


def sweep_cell(func, alpha: float, n: int, N: int, strict: bool = False) -> ConvergenceRecord:
    """Measure one (n, N) cell; quadrature warnings are expected off smooth functions."""
    start = time.perf_counter()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", QuadratureAccuracyWarning)
        pair = pointwise_error_pair(func, HahnContext(alpha, alpha, N), n, strict=strict)
    elapsed_ms = (time.perf_counter() - start) * 1e3
    return ConvergenceRecord(n, N, alpha, pair.sup_hahn_err, pair.sup_jacobi_err,
                             pair.bound_term, elapsed_ms)


def convergence_sweep(func, alpha: float, cells, jobs: int = 1) -> list[ConvergenceRecord]:
    """Run all (n, N) cells, optionally in a thread pool, sorted by (n, N)."""
    cells = list(cells)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(lambda c: sweep_cell(func, alpha, *c), cells))
    else:
        records = [sweep_cell(func, alpha, n, N) for n, N in cells]
    return sorted(records, key=lambda r: (r.n, r.N))


def decomposition_constant(func, alpha: float = 0.0, degrees=(2, 3, 4, 5), power: int = 5) -> float:
    """Calibrated constant for the error-decomposition check.

    The scaled excess max(0, sup_err_hahn - sup_err_jacobi) N / bound-rate is
    collected over a small calibration sweep (N = n^power) and its maximum is
    the constant; the larger acceptance sweep then asserts the same quantity
    stays within a factor 10 of it.  The clamp at zero matters: the discrete
    fit frequently beats the continuous truncation outright.
    """
    worst = 0.0
    for n in degrees:
        record = sweep_cell(func, alpha, n, int(n) ** power)
        excess = max(0.0, record.sup_err_hahn - record.sup_err_jacobi)
        worst = max(worst, excess / record.bound_term)
    return worst
