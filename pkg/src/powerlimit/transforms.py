"""Modulus matrix, the 2x2 phase twist, and the "likewise" relation.

Two matrices are likewise when their entries agree in modulus. Twisting the
off-diagonal of a real 2x2 matrix by opposite phases produces a matrix whose
powers stay likewise to the powers of the original.
"""
import math
from dataclasses import dataclass

import numpy as np

from .matrix import DimensionError, as_matrix

REAL_TOL = 1e-12
ANGULAR_TOL = 1e-9


@dataclass(frozen=True)
class PhaseTwist:
    """Twist angle ``phi`` in radians, reduced to ``[0, 2*pi)``; ``pi`` is excluded."""

    phi: float

    def __post_init__(self):
        phi = math.fmod(float(self.phi), 2 * math.pi)
        if phi < 0:
            phi += 2 * math.pi
        if abs(phi - math.pi) <= ANGULAR_TOL:
            raise ValueError("phase twist by pi is excluded")
        object.__setattr__(self, "phi", phi)


def modulus_matrix(B):
    """Entrywise ``|b_ij|`` as a (real-valued) complex matrix."""
    return np.abs(as_matrix(B)).astype(np.complex128)


def phase_twist(A, t):
    """Multiply ``a_12`` by ``exp(i phi)`` and ``a_21`` by ``exp(-i phi)``.

    ``A`` must be a real 2x2 matrix with nonnegative off-diagonal entries.
    The diagonal may have any sign.
    """
    if not isinstance(t, PhaseTwist):
        t = PhaseTwist(t)
    A = as_matrix(A)
    if A.shape != (2, 2):
        raise DimensionError("phase_twist is defined for 2x2 matrices only")
    if np.max(np.abs(A.imag)) > REAL_TOL:
        raise ValueError("phase_twist expects a real matrix")
    if A[0, 1].real < 0 or A[1, 0].real < 0:
        raise ValueError("phase_twist expects nonnegative off-diagonal entries")
    out = A.real.astype(np.complex128)
    rot = complex(math.cos(t.phi), math.sin(t.phi))
    out[0, 1] *= rot
    out[1, 0] *= rot.conjugate()
    return out


def is_likewise(A, B, tol=1e-10):
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise DimensionError(f"dimension mismatch: {A.shape} vs {B.shape}")
    return bool(np.max(np.abs(np.abs(A) - np.abs(B))) <= tol)
