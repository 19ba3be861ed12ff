"""Pointwise convergence of equidistant least squares under an n^4/N schedule.

The sup error of the degree-n least-squares fit on N+1 equidistant nodes
splits into the continuous (Jacobi/Legendre) truncation error plus a term of
order n^4/N.  Growing the grid like N = n^5 sends that term to zero, and the
fit converges even for merely piecewise-smooth functions like x |x|.

A fixed-ratio schedule (N proportional to n) is shown for contrast: the rate
term then stalls at a constant and nothing in the bound improves.
"""

import numpy as np

from hahnfit import get_test_function
from hahnfit.suites import convergence_sweep

for name in ("xabsx", "runge"):
    func = get_test_function(name)
    print(f"{name} ({func.smoothness_class}), schedule N = n^5:")
    print("   n        N   sup_err_hahn   sup_err_jacobi   n^4/N")
    for record in convergence_sweep(func, 0.0, [(n, n ** 5) for n in (2, 4, 8)]):
        print(f"  {record.n:2d} {record.N:8d}   {record.sup_err_hahn:12.3e}"
              f"   {record.sup_err_jacobi:14.3e}   {record.bound_term:.4f}")
    print()

print("contrast: fixed ratio N = 16 n keeps n^4/N growing, so the bound")
print("stops saying anything even though the fit may still look fine:")
func = get_test_function("xabsx")
print("   n        N   sup_err_hahn   n^4/N")
for record in convergence_sweep(func, 0.0, [(n, 16 * n) for n in (2, 4, 8)]):
    print(f"  {record.n:2d} {record.N:8d}   {record.sup_err_hahn:12.3e}   {record.bound_term:.3f}")
