"""Dense complex matrices: products, powers, norms and the column-modulus check.

A matrix is a square ``numpy.ndarray`` of ``complex128``. :func:`as_matrix`
is the single entry point that enforces that.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels

NORMALIZATION_TOL = 1e-9
ZERO_THRESHOLD = 1e-12


class DimensionError(ValueError):
    """Operands have incompatible or non-square shapes."""


def as_matrix(M):
    """Return ``M`` as a finite square complex128 array (copying only if needed)."""
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise DimensionError(f"expected a non-empty square matrix, got shape {A.shape}")
    A = np.ascontiguousarray(A, dtype=np.complex128)
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def identity(d):
    return np.eye(d, dtype=np.complex128)


def _check_same(A, B):
    if A.shape != B.shape:
        raise DimensionError(f"dimension mismatch: {A.shape} vs {B.shape}")


def _finite(C, what):
    if not np.all(np.isfinite(C)):
        raise OverflowError(f"non-finite entries in {what}")
    return C


def multiply(A, B):
    A, B = as_matrix(A), as_matrix(B)
    _check_same(A, B)
    return _finite(kernels.matmul(A, B), "matrix product")


def power(M, n):
    """``M**n`` by binary exponentiation; ``power(M, 0)`` is the identity."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    M = as_matrix(M)
    result = identity(M.shape[0])
    base = M
    n = int(n)
    first = True
    while n:
        if n & 1:
            # skip the trivial I @ base product
            result = base.copy() if first else _finite(kernels.matmul(result, base), "power")
            first = False
        n >>= 1
        if n:
            base = _finite(kernels.matmul(base, base), "power")
    return result


def column_abs_sums(M):
    """Column sums of entry moduli, ``sum_i |m_ij|`` for each column ``j``."""
    return np.abs(as_matrix(M)).sum(axis=0)


def max_abs_diff(A, B):
    A, B = as_matrix(A), as_matrix(B)
    _check_same(A, B)
    return float(kernels.max_abs_diff(A, B))


def max_modulus(M):
    return float(kernels.max_abs(as_matrix(M)))


@dataclass(frozen=True)
class NormalizationReport:
    column_sums: tuple
    max_deviation: float
    min_modulus: float
    normalized: bool
    all_nonzero: bool
    tol: float = NORMALIZATION_TOL
    zero_threshold: float = ZERO_THRESHOLD

    def to_dict(self):
        return {
            "column_sums": list(self.column_sums),
            "max_deviation": self.max_deviation,
            "min_modulus": self.min_modulus,
            "normalized": self.normalized,
            "all_nonzero": self.all_nonzero,
            "tol": self.tol,
            "zero_threshold": self.zero_threshold,
        }

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        data["column_sums"] = tuple(data["column_sums"])
        return cls(**data)


def validate_normalized(M, tol=NORMALIZATION_TOL, zero_threshold=ZERO_THRESHOLD):
    """Check that every column modulus sum is 1 and that no entry vanishes.

    Violations are reported, not raised.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if zero_threshold < 0:
        raise ValueError("zero_threshold must be nonnegative")
    moduli = np.abs(as_matrix(M))
    sums = moduli.sum(axis=0)
    dev = float(np.max(np.abs(sums - 1.0)))
    mn = float(moduli.min())
    return NormalizationReport(
        column_sums=tuple(float(s) for s in sums),
        max_deviation=dev,
        min_modulus=mn,
        normalized=dev <= tol,
        all_nonzero=mn > zero_threshold,
        tol=tol,
        zero_threshold=zero_threshold,
    )
