"""Where the uniform bound |Q_n| <= 1 stops holding.

Up to the admissible degree n(alpha, N) every member of the symmetric family
stays inside [-1, 1] across the whole interval [0, N].  A few degrees past
the threshold the interval max starts creeping above 1, and soon after it
explodes; the threshold is what makes the least-squares representation
stable.
"""

import math

import numpy as np

from hahnfit import HahnContext, admissible_degree, hahn_table

for alpha, N in [(0.0, 40), (0.5, 100), (1.0, 400)]:
    ctx = HahnContext(alpha, alpha, N)
    bound = admissible_degree(alpha, N)
    print(f"alpha={alpha}, N={N}: admissible degree bound = {bound:.2f}")
    fine = np.linspace(0.0, N, 32 * N + 1)
    top = math.ceil(bound) + 6
    table = hahn_table(ctx, top, fine)
    for n in range(max(0, math.floor(bound) - 2), top + 1):
        interval_max = np.max(np.abs(table[n]))
        marker = "<= admissible" if n <= bound else "   beyond"
        flag = "  <-- exceeds 1" if interval_max > 1.0 + 1e-10 else ""
        print(f"  n={n:3d} {marker}  max over [0, N] = {interval_max:.6f}{flag}")
    print()

print("integer-grid maxima alone can hide the first failures: the bound")
print("breaks between the abscissae first, which is why the sweep above")
print("samples the whole interval.")
