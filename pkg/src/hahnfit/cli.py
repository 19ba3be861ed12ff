"""Command line driver: verification suites, convergence sweeps, expansions.

    hahnfit verify <suite> [--seed S] [--json out.json]
    hahnfit converge --func F --alpha A --schedule pow:5 --n-max M --out out.csv
    hahnfit expand --func F --alpha A --N N --n n --out out.csv
    hahnfit eval --family {hahn,jacobi} --alpha A --beta B [--N N] --k K --x X

Exit codes: 0 on success, 1 on a failed verification assertion, 2 on usage
errors.  Sweep CSVs carry a fixed header and 17-significant-digit floats.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import warnings

import numpy as np

from .errors import DomainError, QuadratureAccuracyWarning, UnsupportedParametersError
from .expansion import (
    Grid,
    SampledFunction,
    hahn_coefficients,
    jacobi_coefficients,
    evaluate_jacobi_series,
    ls_evaluate,
)
from .hahn import HahnContext, admissible_degree, hahn_eval
from .jacobi import JacobiParams, jacobi_eval
from .registry import get_test_function
from .suites import (
    CSV_COLUMNS,
    SUITE_NAMES,
    convergence_sweep,
    doubling_degrees,
    resolve_schedule,
    run_suite,
)

_FLOAT_FMT = "%.17g"


def _fmt(value) -> str:
    if isinstance(value, float):
        return _FLOAT_FMT % value
    return str(value)


def _load_function(parser: argparse.ArgumentParser, name: str):
    try:
        return get_test_function(name)
    except KeyError as exc:
        parser.error(str(exc))  # exits 2


def cmd_verify(args, parser) -> int:
    report = run_suite(args.suite, seed=args.seed)
    for check in report["checks"]:
        status = "ok  " if check["passed"] else "FAIL"
        detail = " ".join(
            f"{key}={_fmt(val)}" for key, val in check.items() if key != "passed"
        )
        print(f"{status} [{args.suite}] {detail}")
    n_failed = sum(not c["passed"] for c in report["checks"])
    print(f"suite {args.suite}: {'PASS' if report['passed'] else f'FAIL ({n_failed} checks)'}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(report, handle, indent=2)
            handle.write("\n")
    return 0 if report["passed"] else 1


def _schedule_annotation(func, schedule: str, alpha: float) -> str:
    """What the smoothness class and schedule together guarantee."""
    exponent = 3.0 + alpha + max(1.0, alpha)
    kind, _, arg = schedule.partition(":")
    rate_vanishes = kind == "pow" and float(arg) > exponent
    if func.smoothness_class == "bv_only":
        return ("bv_only: the rate term n^%.3g/N is controlled but pointwise "
                "convergence of the fit is not guaranteed" % exponent)
    series = ("analytic: the continuous expansion converges uniformly"
              if func.smoothness_class == "analytic"
              else "c1_bv_derivative: the continuous expansion converges uniformly")
    if rate_vanishes:
        return series + f"; N = n^{arg} sends the rate term to zero, so the fit converges pointwise"
    return series + "; this schedule does not send the rate term to zero"


def cmd_converge(args, parser) -> int:
    func = _load_function(parser, args.func)
    try:
        degrees = doubling_degrees(args.n_max)
        sizes = resolve_schedule(args.schedule, degrees)
    except ValueError as exc:
        parser.error(str(exc))
    print(_schedule_annotation(func, args.schedule, args.alpha))
    records = convergence_sweep(func, args.alpha, zip(degrees, sizes), jobs=args.jobs)
    with open(args.out, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in records:
            row = record.as_dict()
            writer.writerow([_fmt(row[col]) for col in CSV_COLUMNS])
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def cmd_expand(args, parser) -> int:
    func = _load_function(parser, args.func)
    if args.n > args.N:
        parser.error(f"need n <= N, got n={args.n} N={args.N}")
    ctx = HahnContext(args.alpha, args.alpha, args.N)
    bound = admissible_degree(args.alpha, args.N)
    grid = Grid(args.N)
    f = SampledFunction.sample(func, grid, args.func)
    coeffs = hahn_coefficients(f, ctx, args.n)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", QuadratureAccuracyWarning)
        jac = jacobi_coefficients(func, ctx.jacobi_params, args.n)
    xs = np.linspace(-1.0, 1.0, 401)
    ls_vals = ls_evaluate(coeffs, ctx, xs)
    jac_vals = evaluate_jacobi_series(jac, xs)
    f_vals = np.asarray(func(xs), dtype=float)
    with open(args.out, "w", encoding="utf-8", newline="") as handle:
        if args.n > bound:
            handle.write(
                f"# warning: n={args.n} exceeds the admissible degree "
                f"{_fmt(bound)} for alpha={_fmt(args.alpha)}, N={args.N}\n"
            )
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["k", "coefficient"])
        for k, c in enumerate(coeffs.coefficients):
            writer.writerow([k, _fmt(float(c))])
        writer.writerow(["x", "f", "ls", "jacobi_partial"])
        for x, fv, lv, jv in zip(xs, f_vals, ls_vals, jac_vals):
            writer.writerow([_fmt(float(x)), _fmt(float(fv)), _fmt(float(lv)), _fmt(float(jv))])
    if args.n > bound:
        print(
            f"warning: n={args.n} exceeds the admissible degree {bound:.3f}",
            file=sys.stderr,
        )
    print(f"wrote coefficients and a 401-point table to {args.out}")
    return 0


def cmd_eval(args, parser) -> int:
    if args.family == "hahn":
        if args.N is None:
            parser.error("--N is required for the hahn family")
        value = hahn_eval(HahnContext(args.alpha, args.beta, args.N), args.k, args.x)
    else:
        if args.N is not None:
            parser.error("--N applies to the hahn family only")
        value = jacobi_eval(JacobiParams(args.alpha, args.beta), args.k, args.x)
    print(_FLOAT_FMT % value)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hahnfit",
        description="Hahn/Jacobi expansions and least squares on equidistant grids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p_verify.add_argument("--json", metavar="PATH", help="also write the report as JSON")

    p_converge = sub.add_parser("converge", help="sweep (n, N) and record sup errors")
    p_converge.add_argument("--func", required=True, help="registry name, poly:c0,c1,... or const:c")
    p_converge.add_argument("--alpha", type=float, default=0.0)
    p_converge.add_argument("--schedule", default="pow:5",
                            help="pow:p, fixed_ratio:r, or list:N1,N2,...")
    p_converge.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_converge.add_argument("--out", required=True)
    p_converge.add_argument("--jobs", type=int, default=1)

    p_expand = sub.add_parser("expand", help="emit coefficients and an evaluation table")
    p_expand.add_argument("--func", required=True)
    p_expand.add_argument("--alpha", type=float, default=0.0)
    p_expand.add_argument("--N", type=int, required=True)
    p_expand.add_argument("--n", type=int, required=True)
    p_expand.add_argument("--out", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one polynomial value")
    p_eval.add_argument("--family", choices=["hahn", "jacobi"], required=True)
    p_eval.add_argument("--alpha", type=float, required=True)
    p_eval.add_argument("--beta", type=float, required=True)
    p_eval.add_argument("--N", type=int, default=None)
    p_eval.add_argument("--k", type=int, required=True)
    p_eval.add_argument("--x", type=float, required=True)

    return parser


_COMMANDS = {
    "verify": cmd_verify,
    "converge": cmd_converge,
    "expand": cmd_expand,
    "eval": cmd_eval,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, parser)
    except (DomainError, UnsupportedParametersError) as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
