import math

import numpy as np
import pytest

from hahnfit import (
    DomainError,
    JacobiParams,
    QuadratureAccuracyWarning,
    QuadratureSpec,
    gauss_legendre_integrate,
    gauss_legendre_nodes,
    integrate,
    jacobi_coefficient_continuous,
    jacobi_eval,
    trapezoid_integrate,
)

LEGENDRE = JacobiParams(0.0, 0.0)


def test_spec_validation():
    QuadratureSpec("gauss_legendre", 8)
    QuadratureSpec("trapezoid", 1)
    with pytest.raises(DomainError):
        QuadratureSpec("gauss_legendre", 1)
    with pytest.raises(DomainError):
        QuadratureSpec("midpoint", 4)


def test_nodes_structure():
    for m in (2, 3, 8, 15):
        x, w = gauss_legendre_nodes(m)
        assert x.shape == w.shape == (m,)
        assert np.all(np.diff(x) > 0)
        assert np.all(w > 0)
        assert np.allclose(x, -x[::-1])
        assert np.allclose(w, w[::-1])
        assert math.fsum(w) == pytest.approx(2.0, rel=1e-14)
    assert gauss_legendre_nodes(1)[0][0] == 0.0
    assert not gauss_legendre_nodes(8)[0].flags.writeable


def test_polynomial_exactness():
    # exact up to degree 2m - 1 for every m in 2..20
    for m in range(2, 21):
        for degree in range(2 * m):
            val = gauss_legendre_integrate(lambda x, d=degree: x ** d, m)
            exact = 2.0 / (degree + 1) if degree % 2 == 0 else 0.0
            if degree % 2 == 0:
                assert val == pytest.approx(exact, rel=1e-12)
            else:
                assert abs(val) <= 1e-14


def test_integrate_examples():
    assert gauss_legendre_integrate(lambda x: x ** 4, 3) == pytest.approx(0.4, rel=1e-13)
    assert gauss_legendre_integrate(lambda x: np.ones_like(x), 5) == pytest.approx(2.0, rel=1e-15)
    p3p5 = gauss_legendre_integrate(
        lambda x: jacobi_eval(LEGENDRE, 3, x) * jacobi_eval(LEGENDRE, 5, x), 5
    )
    assert abs(p3p5) <= 1e-12


def test_large_rule_accuracy():
    # analytic reference: integral of e^x over [-1, 1]
    val = gauss_legendre_integrate(np.exp, 2 ** 14)
    assert val == pytest.approx(math.e - 1.0 / math.e, rel=1e-14)


def test_integrate_dispatch():
    spec = QuadratureSpec("gauss_legendre", 6)
    assert integrate(lambda x: x ** 2, spec) == pytest.approx(2.0 / 3.0, rel=1e-14)
    spec = QuadratureSpec("trapezoid", 500)
    assert integrate(lambda x: x ** 2, spec) == pytest.approx(2.0 / 3.0, abs=1e-4)


def test_trapezoid_constant_exact():
    for N in (1, 7, 10, 333):
        assert trapezoid_integrate(lambda x: np.ones_like(x), N) == pytest.approx(2.0, rel=1e-15)


def test_trapezoid_square_gap():
    # T_10 of x^2 is 0.68; the true integral is 2/3, the gap about 0.01333
    val = trapezoid_integrate(lambda x: x ** 2, 10)
    assert val == pytest.approx(0.68, rel=1e-14)
    gap = abs(val - 2.0 / 3.0)
    assert gap == pytest.approx(2.0 / 150.0, rel=1e-10)
    assert gap <= 2.0 / 10.0  # variation of x^2 over [-1,1] divided by N


def test_trapezoid_abs_even_N_exact():
    # even N places a node on the kink, and |x| is piecewise linear
    for N in (4, 10, 100):
        assert trapezoid_integrate(np.abs, N) == pytest.approx(1.0, rel=1e-14)


def test_trapezoid_domain():
    with pytest.raises(DomainError):
        trapezoid_integrate(np.abs, 0)


def test_coefficient_self_projection():
    assert jacobi_coefficient_continuous(
        lambda x: jacobi_eval(LEGENDRE, 2, x), LEGENDRE, 2
    ) == pytest.approx(1.0, rel=1e-12)


def test_coefficient_examples():
    assert jacobi_coefficient_continuous(lambda x: np.asarray(x, float), LEGENDRE, 1) \
        == pytest.approx(1.0, rel=1e-12)
    assert abs(jacobi_coefficient_continuous(lambda x: np.asarray(x, float), LEGENDRE, 2)) <= 1e-14
    # mean of |x| against the constant: half the integral of |x|; the kink
    # keeps the Gauss rule from its full tolerance, hence the capped accuracy
    with pytest.warns(QuadratureAccuracyWarning):
        mean = jacobi_coefficient_continuous(np.abs, LEGENDRE, 0)
    assert mean == pytest.approx(0.5, abs=5e-8)


def test_coefficient_consistency_delta():
    pairs = [JacobiParams(0.0, 0.0), JacobiParams(1.0, 1.0),
             JacobiParams(0.5, 0.5), JacobiParams(1.0, 2.0)]
    import warnings
    for params in pairs:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", QuadratureAccuracyWarning)
            for j in range(11):
                for k in range(11):
                    got = jacobi_coefficient_continuous(
                        lambda x, _j=j: jacobi_eval(params, _j, x), params, k
                    )
                    assert got == pytest.approx(1.0 if j == k else 0.0, abs=1e-10)


def test_coefficient_cap_warning():
    # an unreachable tolerance must warn rather than loop forever or lie
    with pytest.warns(QuadratureAccuracyWarning):
        jacobi_coefficient_continuous(np.abs, LEGENDRE, 0, rtol=1e-18)
