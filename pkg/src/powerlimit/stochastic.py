"""Classical limit for strictly positive column-stochastic matrices.

For such ``P`` the powers converge to ``v 1^T``, every column equal to the
stationary vector ``v`` (``P v = v``, ``sum(v) = 1``).
"""
from dataclasses import dataclass

import numpy as np

from .matrix import DimensionError, as_matrix


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class StationaryVector:
    v: np.ndarray
    residual: float


def stationary_vector(P, tol=1e-13, max_iter=1_000_000):
    """Power iteration ``v <- P v`` from the uniform vector.

    Stops once successive vectors differ by at most ``tol`` in max norm.
    """
    P = as_matrix(P)
    if np.max(np.abs(P.imag)) > 1e-12:
        raise ValueError("stationary_vector expects a real matrix")
    R = np.ascontiguousarray(P.real)
    if np.min(R) <= 0:
        raise ValueError("stationary_vector expects strictly positive entries")
    if np.max(np.abs(R.sum(axis=0) - 1.0)) > 1e-9:
        raise ValueError("columns of P must sum to 1")
    d = R.shape[0]
    v = np.full(d, 1.0 / d)
    for _ in range(max_iter):
        w = R @ v
        w /= w.sum()
        step = np.max(np.abs(w - v))
        v = w
        if step <= tol:
            break
    else:
        raise ConvergenceError(f"power iteration did not settle within {max_iter} steps")
    residual = float(np.max(np.abs(R @ v - v)))
    return StationaryVector(v=v, residual=residual)


def rank_one_limit(v, d=None):
    """Matrix whose every column is the stationary vector."""
    vec = np.asarray(v.v if isinstance(v, StationaryVector) else v, dtype=float)
    if d is None:
        d = vec.shape[0]
    if vec.shape != (d,):
        raise DimensionError(f"stationary vector has shape {vec.shape}, expected ({d},)")
    return np.repeat(vec[:, None], d, axis=1).astype(np.complex128)
