"""Tour of the two polynomial families and their shared structure.

Evaluates a few Hahn and Jacobi members, shows the binomial-product weight,
checks discrete orthogonality by brute-force summation against the
closed-form norms, and verifies the exact ratio tying the discrete norm to
the continuous one.
"""

import math

import numpy as np

from hahnfit import (
    Grid,
    HahnContext,
    JacobiParams,
    compensated_sum,
    hahn_norm,
    hahn_table,
    hahn_weight_grid,
    jacobi_eval,
    jacobi_norm,
    norm_ratio_identity_check,
)

ctx = HahnContext(alpha=1.0, beta=1.0, N=20)
grid = Grid(ctx.N)

print(f"family: alpha={ctx.alpha}, beta={ctx.beta}, N={ctx.N}")
print("\nweight at the integer abscissae (symmetric, vanishing slowest mid-grid):")
w = hahn_weight_grid(ctx)
print("  ", np.array2string(np.asarray(w[:6]), precision=1), "...")

print("\nfirst members at a few abscissae (every Q_k starts at 1):")
table = hahn_table(ctx, 4, np.arange(ctx.N + 1, dtype=float))
for k in range(5):
    row = " ".join(f"{table[k, x]:+.3f}" for x in (0, 5, 10, 15, 20))
    print(f"  Q_{k}: {row}")

print("\nbrute-force Gram matrix vs closed-form norms (degrees 0..4):")
for j in range(5):
    sums = [compensated_sum(w * table[j] * table[k]) for k in range(5)]
    formatted = " ".join(f"{s:+.2e}" for s in sums)
    print(f"  <Q_{j}, .> = {formatted}   closed form: {hahn_norm(ctx, j):.6e}")

print("\nthe continuous siblings P_k^(1,1) at x = 1 hit binom(k+1, k):")
params = JacobiParams(1.0, 1.0)
for k in range(5):
    print(f"  P_{k}(1) = {jacobi_eval(params, k, 1.0):.1f}   norm = {jacobi_norm(params, k):.6f}")

print("\nexact norm-ratio identity (relative discrepancy per degree):")
for k in range(5):
    print(f"  degree {k}: {norm_ratio_identity_check(ctx, k):.2e}")

print("\nboth families share one grid:", grid)
