import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import I2, J, ROT_I, TWISTED_J
from powerlimit.matrix import DimensionError, power
from powerlimit.transforms import PhaseTwist, is_likewise, modulus_matrix, phase_twist


def test_modulus_matrix_examples():
    np.testing.assert_array_equal(modulus_matrix(ROT_I), J)
    P = np.array([[0.3, 0.9], [0.7, 0.1]])
    np.testing.assert_array_equal(modulus_matrix(P), P)
    np.testing.assert_array_equal(modulus_matrix([[-0.5, 0.5], [0.5, -0.5]]), J)


def test_modulus_matrix_idempotent():
    M = modulus_matrix(TWISTED_J)
    np.testing.assert_array_equal(modulus_matrix(M), M)
    assert np.all(M.imag == 0)


def test_phase_twist_examples():
    A = np.array([[0.6, 0.4], [0.4, 0.6]])
    out = phase_twist(A, PhaseTwist(math.pi / 3))
    expected = [[0.6, 0.4 * cmath.exp(1j * math.pi / 3)], [0.4 * cmath.exp(-1j * math.pi / 3), 0.6]]
    np.testing.assert_allclose(out, expected, atol=1e-16)
    np.testing.assert_array_equal(phase_twist(A, 0.0), A)
    np.testing.assert_allclose(phase_twist(J, math.pi / 4), TWISTED_J, atol=1e-16)


def test_phase_twist_allows_negative_diagonal():
    A = np.array([[-0.6, 0.4], [0.4, 0.6]])
    assert phase_twist(A, 1.0)[0, 0] == -0.6


@pytest.mark.parametrize(
    "A",
    [
        np.eye(3),
        np.array([[0.5, 0.5j], [0.5, 0.5]]),
        np.array([[0.5, -0.5], [0.5, 0.5]]),
    ],
)
def test_phase_twist_preconditions(A):
    with pytest.raises(ValueError):
        phase_twist(A, 1.0)


def test_phase_twist_rejects_pi():
    with pytest.raises(ValueError):
        PhaseTwist(math.pi)
    assert PhaseTwist(-math.pi / 2).phi == pytest.approx(1.5 * math.pi)


def test_is_likewise_examples():
    assert is_likewise(ROT_I, ROT_I)
    assert is_likewise(J, ROT_I)
    assert not is_likewise(J, I2)
    with pytest.raises(DimensionError):
        is_likewise(J, np.eye(3))


def real_a(rng):
    """Random real 2x2 with nonnegative off-diagonals, column modulus sums 1."""
    A = rng.uniform(-1, 1, (2, 2))
    A[0, 1], A[1, 0] = abs(A[0, 1]), abs(A[1, 0])
    return A / np.abs(A).sum(axis=0)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), phi=st.floats(0, 2 * math.pi, exclude_max=True))
def test_powers_stay_likewise(seed, phi):
    if abs(phi - math.pi) < 1e-6:
        phi += 0.1
    A = real_a(np.random.default_rng(seed))
    T = phase_twist(A, phi)
    rot = cmath.exp(1j * PhaseTwist(phi).phi)
    for n in range(1, 51):
        An, Tn = power(A, n), power(T, n)
        assert is_likewise(An, Tn, 1e-10)
        assert abs(Tn[0, 1] - An[0, 1] * rot) <= 1e-10


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), phi=st.floats(0, 2 * math.pi, exclude_max=True))
def test_twist_keeps_moduli(seed, phi):
    if abs(phi - math.pi) < 1e-6:
        phi += 0.1
    A = real_a(np.random.default_rng(seed))
    # |cos + i sin| is 1 only to rounding
    np.testing.assert_allclose(modulus_matrix(phase_twist(A, phi)), modulus_matrix(A), rtol=1e-15, atol=0)
