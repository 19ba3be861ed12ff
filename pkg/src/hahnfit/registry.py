"""Named test functions for the experiment harness.

Each entry records its smoothness class, which decides which convergence
statements apply to it: analytic functions have uniformly convergent
expansions, c1_bv_derivative members (continuously differentiable with a
bounded-variation derivative) are the class for which the n^4/N schedule
guarantees pointwise least-squares convergence, and bv_only members merely
have bounded variation themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

__all__ = ["TestFunction", "REGISTRY", "get_test_function", "registry_names"]


@dataclass(frozen=True)
class TestFunction:
    name: str
    closure: Callable
    smoothness_class: str  # analytic | c1_bv_derivative | bv_only
    known_tv: Optional[float] = None
    known_integral: Optional[float] = None

    def __call__(self, x):
        return self.closure(x)


def _runge(x):
    x = np.asarray(x, dtype=float)
    return 1.0 / (1.0 + 25.0 * x * x)


def _absx(x):
    return np.abs(np.asarray(x, dtype=float))


def _xabsx(x):
    x = np.asarray(x, dtype=float)
    return x * np.abs(x)


def _expx(x):
    return np.exp(np.asarray(x, dtype=float))


REGISTRY = {
    # runge falls from 1 at 0 to 1/26 at the endpoints, twice monotone
    "runge": TestFunction("runge", _runge, "analytic",
                          known_tv=2.0 * (1.0 - 1.0 / 26.0),
                          known_integral=2.0 * math.atan(5.0) / 5.0),
    "absx": TestFunction("absx", _absx, "bv_only", known_tv=2.0, known_integral=1.0),
    # x |x| is monotone (TV = 2); its derivative 2|x| is the BV function that
    # puts it in the c1_bv_derivative class (derivative TV = 4)
    "xabsx": TestFunction("xabsx", _xabsx, "c1_bv_derivative",
                          known_tv=2.0, known_integral=0.0),
    "expx": TestFunction("expx", _expx, "analytic",
                         known_tv=math.e - 1.0 / math.e,
                         known_integral=math.e - 1.0 / math.e),
}


def _parse_floats(spec: str, what: str):
    try:
        return [float(part) for part in spec.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise KeyError(f"malformed {what} specification {spec!r}") from exc


def get_test_function(name: str) -> TestFunction:
    """Look up a registry entry; understands poly:c0,c1,... and const:c too."""
    if name in REGISTRY:
        return REGISTRY[name]
    if name.startswith("poly:"):
        coeffs = _parse_floats(name[len("poly:"):], "poly")
        if not coeffs:
            raise KeyError(f"poly needs at least one coefficient: {name!r}")
        arr = np.asarray(coeffs, dtype=float)

        def closure(x, _c=arr):
            return np.polynomial.polynomial.polyval(np.asarray(x, dtype=float), _c)

        integral = float(sum(2.0 * c / (k + 1) for k, c in enumerate(coeffs) if k % 2 == 0))
        return TestFunction(name, closure, "analytic", known_tv=None, known_integral=integral)
    if name.startswith("const:"):
        values = _parse_floats(name[len("const:"):], "const")
        if len(values) != 1:
            raise KeyError(f"const takes exactly one value: {name!r}")
        c = values[0]

        def closure(x, _c=c):
            return np.full_like(np.asarray(x, dtype=float), _c)

        return TestFunction(name, closure, "analytic", known_tv=0.0, known_integral=2.0 * c)
    raise KeyError(f"unknown test function {name!r}")


def registry_names():
    return sorted(REGISTRY)
