from fractions import Fraction

import numpy as np
import pytest

from conftest import J
from powerlimit.generator import MatrixFamily, generate
from powerlimit.iteration import fixed_point_residual, iterate
from powerlimit.matrix import DimensionError, max_abs_diff, multiply
from powerlimit.stochastic import StationaryVector, rank_one_limit, stationary_vector

P2 = np.array([[0.9, 0.2], [0.1, 0.8]])


def solve_stationary_exact(P):
    """Gaussian elimination over the rationals on (P - I) v = 0, sum(v) = 1."""
    d = len(P)
    rows = [[Fraction(P[i][j]).limit_denominator(10**6) - (i == j) for j in range(d)] + [Fraction(0)] for i in range(d - 1)]
    rows.append([Fraction(1)] * d + [Fraction(1)])
    for c in range(d):
        piv = next(r for r in range(c, d) if rows[r][c] != 0)
        rows[c], rows[piv] = rows[piv], rows[c]
        for r in range(d):
            if r != c and rows[r][c] != 0:
                f = rows[r][c] / rows[c][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return [rows[i][d] / rows[i][i] for i in range(d)]


def test_exact_oracle():
    assert solve_stationary_exact(P2.tolist()) == [Fraction(2, 3), Fraction(1, 3)]


@pytest.mark.parametrize(
    "P, v",
    [
        (J.real, [0.5, 0.5]),
        (P2, [2 / 3, 1 / 3]),
        (np.full((3, 3), 1 / 3), [1 / 3] * 3),
    ],
)
def test_stationary_vector(P, v):
    s = stationary_vector(P)
    np.testing.assert_allclose(s.v, v, atol=1e-12)
    assert s.residual <= 1e-12
    assert abs(s.v.sum() - 1) <= 1e-12


@pytest.mark.parametrize(
    "P",
    [
        np.array([[0.5, 0.5j], [0.5, 0.5]]),
        np.array([[1.0, 0.5], [0.0, 0.5]]),
        np.full((2, 2), 0.25),
    ],
)
def test_stationary_vector_preconditions(P):
    with pytest.raises(ValueError):
        stationary_vector(P)


def test_rank_one_limit_examples():
    np.testing.assert_array_equal(rank_one_limit(np.array([0.5, 0.5]), 2), J)
    L = rank_one_limit(StationaryVector(np.array([2 / 3, 1 / 3]), 0.0), 2)
    np.testing.assert_allclose(L, [[2 / 3, 2 / 3], [1 / 3, 1 / 3]])
    assert max_abs_diff(L, iterate(P2).limit) <= 1e-8
    np.testing.assert_allclose(rank_one_limit(np.full(3, 1 / 3), 3), np.full((3, 3), 1 / 3))
    with pytest.raises(DimensionError):
        rank_one_limit(np.array([0.5, 0.5]), 3)


@pytest.mark.parametrize("d", [2, 3, 5, 8])
@pytest.mark.parametrize("seed", range(5))
def test_limit_cross_check(d, seed):
    P = generate(MatrixFamily("PositiveStochastic", d), seed)
    L = rank_one_limit(stationary_vector(P), d)
    assert max_abs_diff(L, iterate(P).limit) <= 1e-8
    assert fixed_point_residual(L, P) <= 1e-10
    assert max_abs_diff(multiply(L, L), L) <= 1e-10
