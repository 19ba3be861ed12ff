"""Total variation as a workhorse: estimation, the product rule, quadrature.

The variation estimator refines equidistant partition sums until they settle;
V[f g] is controlled by max|f| V[g] + max|g| V[f]; and the composite
trapezoid rule with half-weighted endpoints keeps its error below V[f] / N.
"""

import numpy as np

from hahnfit import (
    REGISTRY,
    JacobiParams,
    jacobi_eval,
    jacobi_tv_bound,
    product_bound_check,
    trapezoid_integrate,
    tv_estimate,
)

print("variation of the first Legendre members vs the 2 n binom(n, n) = 2 n bound:")
legendre = JacobiParams(0.0, 0.0)
for n in range(1, 7):
    est = tv_estimate(lambda x, _n=n: jacobi_eval(legendre, _n, x), 100_001)
    print(f"  n={n}: measured {est.value:.4f}  bound {jacobi_tv_bound(legendre, n):.1f}"
          f"  ({est.sample_count} samples)")

print("\nproduct rule on a few pairs:")
pairs = [("x", lambda t: np.asarray(t, float)),
         ("x^2", lambda t: np.asarray(t, float) ** 2),
         ("|x|", lambda t: np.abs(np.asarray(t, float)))]
for (fname, f) in pairs:
    for (gname, g) in pairs:
        measured, bound, ok = product_bound_check(f, g)
        print(f"  V[{fname} * {gname}] = {measured:.4f} <= {bound:.4f}  conclusive={ok}")

print("\ntrapezoid error against the variation/N bound, registry functions:")
for name, tf in sorted(REGISTRY.items()):
    print(f"  {name}: V[f] = {tf.known_tv:.4f}")
    for N in (10, 100, 1000):
        gap = abs(tf.known_integral - trapezoid_integrate(tf, N))
        print(f"    N={N:5d}: |integral - T_N| = {gap:.3e} <= {tf.known_tv / N:.3e}")
