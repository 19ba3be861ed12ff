import math

import pytest

from hahnfit import (
    DomainError,
    LogValue,
    gamma_ratio_estimate,
    log_binomial,
    log_gamma,
    pochhammer,
)


def test_log_gamma_small_integers():
    assert log_gamma(1.0) == 0.0
    assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-15)


def test_log_gamma_against_exact_factorial():
    # Gamma(101) = 100!, computable exactly as a big integer
    exact = math.log(math.factorial(100))
    assert log_gamma(101.0) == pytest.approx(exact, rel=1e-13)


def test_log_gamma_accuracy_across_range():
    # half-integer arguments have closed forms via Gamma(1/2) = sqrt(pi)
    # Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
    for k in (1, 5, 40, 900):
        exact = (
            math.log(math.factorial(2 * k))
            + 0.5 * math.log(math.pi)
            - k * math.log(4.0)
            - math.log(math.factorial(k))
        )
        assert log_gamma(k + 0.5) == pytest.approx(exact, rel=1e-13)


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-2.5)


def test_logvalue_round_trip():
    assert LogValue.from_float(-3.5).value == pytest.approx(-3.5, rel=1e-15)
    assert LogValue.from_float(0.0).sign == 0
    assert LogValue.from_float(0.0).value == 0.0


def test_logvalue_products_beyond_double_range():
    # Gamma(1e4)^2 / Gamma(1e4)^2 overflows plain floats midway, not here
    g = LogValue(log_gamma(1e4), 1)
    ratio = (g * g) / (g * g)
    assert ratio.value == pytest.approx(1.0, rel=1e-12)
    assert (g * g).log_magnitude > 700  # the intermediate really is > 1e308


def test_logvalue_zero_and_signs():
    zero = LogValue.from_float(0.0)
    two = LogValue.from_float(2.0)
    assert (zero * two).sign == 0
    assert (two * LogValue.from_float(-3.0)).value == pytest.approx(-6.0)
    assert (-two).value == pytest.approx(-2.0)
    with pytest.raises(ZeroDivisionError):
        two / zero


def test_pochhammer_examples():
    assert pochhammer(3.0, 4).value == pytest.approx(360.0, rel=1e-13)
    assert pochhammer(17.3, 0).value == 1.0
    assert pochhammer(-5.0, 0).value == 1.0
    assert pochhammer(-2.0, 4).sign == 0
    assert pochhammer(-2.0, 4).value == 0.0


def test_pochhammer_negative_arguments():
    # all-negative chain: (-2.5)(-1.5)(-0.5) = -1.875
    assert pochhammer(-2.5, 3).value == pytest.approx(-1.875, rel=1e-13)
    # chain crossing zero: (-2.5)(-1.5)(-0.5)(0.5) = -0.9375
    assert pochhammer(-2.5, 4).value == pytest.approx(-0.9375, rel=1e-13)
    # integer chain staying negative: (-5)(-4)(-3) = -60
    assert pochhammer(-5.0, 3).value == pytest.approx(-60.0, rel=1e-13)
    # (0)_k = 0 for k >= 1
    assert pochhammer(0.0, 3).sign == 0


def test_pochhammer_splitting_property(rng):
    # (a)_(j+k) = (a)_j (a+j)_k
    for _ in range(200):
        a = float(rng.uniform(-6.0, 6.0))
        j = int(rng.integers(0, 9))
        k = int(rng.integers(0, 9))
        whole = pochhammer(a, j + k)
        split = pochhammer(a, j) * pochhammer(a + j, k)
        assert whole.sign == split.sign
        if whole.sign != 0:
            assert whole.log_magnitude == pytest.approx(split.log_magnitude, abs=1e-12)
            rel = abs(math.expm1(whole.log_magnitude - split.log_magnitude))
            assert rel <= 1e-12


def test_log_binomial_examples():
    assert log_binomial(5.0, 2).value == pytest.approx(10.0, rel=1e-13)
    assert log_binomial(0.37, 0).value == 1.0
    assert log_binomial(2.5, 2).value == pytest.approx(1.875, rel=1e-13)
    assert log_binomial(-0.5, 2).value == pytest.approx(0.375, rel=1e-13)


def test_log_binomial_matches_exact_integers():
    for top in range(61):
        for k in range(top + 1):
            exact = math.comb(top, k)
            assert log_binomial(float(top), k).value == pytest.approx(exact, rel=1e-12)


def test_log_binomial_pole_rejected():
    with pytest.raises(DomainError):
        log_binomial(3.0, 5)  # top - k + 1 = -1
    with pytest.raises(DomainError):
        log_binomial(-1.0, 1)
    with pytest.raises(DomainError):
        log_binomial(4.0, -1)


def test_gamma_ratio_estimate_examples():
    assert gamma_ratio_estimate(100.0, 1.0, 2.0) == pytest.approx(0.99, rel=1e-15)
    assert gamma_ratio_estimate(1000.0, 3.7, 3.7) == 1.0
    assert gamma_ratio_estimate(1000.0, 1.0, 2.0) == pytest.approx(0.999, rel=1e-15)


def _exact_gamma_ratio(N, a, b):
    return math.exp((b - a) * math.log(N) + log_gamma(N + a) - log_gamma(N + b))


def test_gamma_ratio_estimate_gap_scale():
    # exact value Gamma(101)/Gamma(102) * 100 = 100/101
    exact = _exact_gamma_ratio(100.0, 1.0, 2.0)
    assert exact == pytest.approx(100.0 / 101.0, rel=1e-14)
    gap = abs(exact - gamma_ratio_estimate(100.0, 1.0, 2.0))
    assert 1e-5 < gap < 2e-4
    gap_1000 = abs(_exact_gamma_ratio(1000.0, 1.0, 2.0) - gamma_ratio_estimate(1000.0, 1.0, 2.0))
    assert gap_1000 < 2e-6


def test_gamma_ratio_estimate_second_order():
    # |exact - estimate| * N^2 stays bounded as N grows: the remainder is O(1/N^2)
    for a, b in [(0.5, 3.5), (1.0, 2.0), (2.5, 4.5), (4.0, 1.0)]:
        scaled = []
        for N in (1e2, 1e3, 1e4):
            gap = abs(_exact_gamma_ratio(N, a, b) - gamma_ratio_estimate(N, a, b))
            scaled.append(gap * N * N)
        assert scaled[1] <= 2.0 * scaled[0] + 1e-9
        assert scaled[2] <= 2.0 * scaled[0] + 1e-9
