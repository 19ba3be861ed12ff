"""Exact-arithmetic oracles shared by the test modules.

The rational-recurrence evaluators below mirror none of the library code:
they unroll the three-term recurrences in fractions.Fraction, so every value
they produce is exact for rational parameters.
"""

from fractions import Fraction

import numpy as np
import pytest


def exact_hahn_row(alpha: Fraction, beta: Fraction, N: int, k: int):
    """Recurrence pair (A_k, C_k) in exact rational arithmetic."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if k == 0:
        return Fraction(alpha + 1) * N / (alpha + beta + 2), Fraction(0)
    s = 2 * k + alpha + beta
    A = (k + alpha + beta + 1) * (k + alpha + 1) * (N - k) / ((s + 1) * (s + 2))
    C = k * (k + alpha + beta + N + 1) * (k + beta) / (s * (s + 1))
    return A, C


def exact_hahn_values(alpha, beta, N: int, n: int):
    """Q_k(x) for k = 0..n at every integer abscissa, as exact fractions.

    Returns a list of lists: values[k][x].
    """
    xs = [Fraction(x) for x in range(N + 1)]
    values = [[Fraction(1) for _ in xs]]
    if n >= 1:
        A0, _ = exact_hahn_row(alpha, beta, N, 0)
        values.append([(A0 - x) / A0 for x in xs])
        for k in range(1, n):
            A, C = exact_hahn_row(alpha, beta, N, k)
            values.append([
                ((A + C - x) * values[k][i] - C * values[k - 1][i]) / A
                for i, x in enumerate(xs)
            ])
    return values


def exact_hahn_weights(alpha: int, beta: int, N: int):
    """Weights binom(alpha+x, x) binom(beta+N-x, N-x), exact for integer exponents."""
    from math import comb

    return [Fraction(comb(alpha + x, x) * comb(beta + N - x, N - x)) for x in range(N + 1)]


def exact_discrete_norm(alpha: int, beta: int, N: int, k: int) -> Fraction:
    """Brute-force <Q_k, Q_k> as an exact fraction (integer exponents only)."""
    values = exact_hahn_values(alpha, beta, N, k)[k]
    weights = exact_hahn_weights(alpha, beta, N)
    return sum(w * v * v for w, v in zip(weights, values))


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)
