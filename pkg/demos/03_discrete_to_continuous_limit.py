"""The normalized discrete family converges to the Jacobi family at rate 1/N.

Q~_k(t) = (-1)^k binom(k+alpha, k) Q_k(N (1+t)/2) lines up with
P_k^(alpha,alpha)(t) as N grows.  The sup gap over the grid falls like 1/N
(the log-log slope against 1/N is 1); degree 1 is special because the
affine map reproduces it exactly at alpha = 0.
"""

import numpy as np

from hahnfit import Grid, HahnContext, JacobiParams, jacobi_eval, normalized_hahn_eval

params = JacobiParams(0.0, 0.0)
sizes = [200, 400, 800, 1600]

print("sup |Q~_n - P_n| over the grid:")
print("  n \\ N " + "".join(f"{N:>12d}" for N in sizes) + "       slope")
for n in range(1, 6):
    sups = []
    for N in sizes:
        grid = Grid(N)
        ctx = HahnContext(0.0, 0.0, N)
        gap = np.abs(normalized_hahn_eval(ctx, n, grid.nodes)
                     - jacobi_eval(params, n, grid.nodes))
        sups.append(float(np.max(gap)))
    if max(sups) < 1e-12:
        slope = "exact"
    else:
        slope = f"{np.polyfit(np.log(1.0 / np.asarray(sizes, float)), np.log(sups), 1)[0]:11.3f}"
    print(f"  {n:5d} " + "".join(f"{s:12.3e}" for s in sups) + f" {slope}")

print("\nhalving check at n = 3 (each doubling of N should halve the gap):")
prev = None
for N in sizes:
    grid = Grid(N)
    gap = float(np.max(np.abs(normalized_hahn_eval(HahnContext(0.0, 0.0, N), 3, grid.nodes)
                              - jacobi_eval(params, 3, grid.nodes))))
    ratio = "" if prev is None else f"   ratio to previous: {gap / prev:.3f}"
    print(f"  N={N:5d}: gap {gap:.3e}{ratio}")
    prev = gap
