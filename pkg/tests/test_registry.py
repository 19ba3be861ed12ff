import math

import numpy as np
import pytest

from hahnfit import REGISTRY, get_test_function, trapezoid_integrate


def test_fixed_entries():
    assert set(REGISTRY) == {"runge", "absx", "xabsx", "expx"}
    assert REGISTRY["runge"].smoothness_class == "analytic"
    assert REGISTRY["absx"].smoothness_class == "bv_only"
    assert REGISTRY["xabsx"].smoothness_class == "c1_bv_derivative"
    assert REGISTRY["expx"].smoothness_class == "analytic"


def test_closures_vectorize():
    xs = np.linspace(-1.0, 1.0, 11)
    for tf in REGISTRY.values():
        assert np.asarray(tf(xs)).shape == xs.shape


def test_known_values():
    assert REGISTRY["runge"].known_integral == pytest.approx(2.0 * math.atan(5.0) / 5.0)
    assert REGISTRY["runge"].known_tv == pytest.approx(2.0 * 25.0 / 26.0)
    assert REGISTRY["absx"].known_tv == 2.0
    assert REGISTRY["absx"].known_integral == 1.0
    assert REGISTRY["xabsx"].known_tv == 2.0
    assert REGISTRY["xabsx"].known_integral == 0.0
    assert REGISTRY["expx"].known_integral == pytest.approx(math.e - 1.0 / math.e)


def test_known_integrals_match_quadrature():
    # the trapezoid rule at large N is an independent arbiter
    for tf in REGISTRY.values():
        assert trapezoid_integrate(tf, 200_000) == pytest.approx(tf.known_integral, abs=1e-7)


def test_poly_parsing():
    tf = get_test_function("poly:0,0,0,1")
    assert tf(0.5) == pytest.approx(0.125)
    assert tf.known_integral == pytest.approx(0.0)
    even = get_test_function("poly:1,0,3")
    assert even.known_integral == pytest.approx(2.0 + 2.0)
    assert even.smoothness_class == "analytic"


def test_const_parsing():
    tf = get_test_function("const:2.5")
    assert np.all(tf(np.linspace(-1, 1, 5)) == 2.5)
    assert tf.known_tv == 0.0
    assert tf.known_integral == 5.0


def test_unknown_names():
    with pytest.raises(KeyError):
        get_test_function("sine")
    with pytest.raises(KeyError):
        get_test_function("poly:")
    with pytest.raises(KeyError):
        get_test_function("const:1,2")
    with pytest.raises(KeyError):
        get_test_function("poly:a,b")
