"""Inner loops: complex matrix product and the step-by-step power iteration.

Each kernel exists twice. The ``*_nb`` versions are explicit loops compiled
with numba; the ``*_np`` versions are plain vectorised numpy. Both follow the
same control flow so they return the same verdicts. The public names at the
bottom point at whichever backend :mod:`powerlimit._accel` selected.
"""
import numpy as np

from ._accel import BACKEND, njit

# Verdict codes returned by the iteration kernels.
NONZERO = 0
ZERO = 1
OSCILLATES = 2
INCONCLUSIVE = 3
OVERFLOW = 4


@njit
def matmul_into_nb(A, B, out):
    d = A.shape[0]
    m = B.shape[1]
    for i in range(d):
        for j in range(m):
            acc = 0j
            for k in range(A.shape[1]):
                acc += A[i, k] * B[k, j]
            out[i, j] = acc
    return out


@njit
def matmul_nb(A, B):
    out = np.empty((A.shape[0], B.shape[1]), dtype=np.complex128)
    return matmul_into_nb(A, B, out)


@njit
def max_abs_nb(A):
    best = 0.0
    for i in range(A.shape[0]):
        for j in range(A.shape[1]):
            v = abs(A[i, j])
            # NaN must propagate so callers can detect it
            if v > best or v != v:
                best = v
    return best


@njit
def max_abs_diff_nb(A, B):
    best = 0.0
    for i in range(A.shape[0]):
        for j in range(A.shape[1]):
            v = abs(A[i, j] - B[i, j])
            if v > best or v != v:
                best = v
    return best


@njit
def iterate_nb(B, conv_tol, zero_tol, max_iter, window, osc_floor):
    """Run X(n+1) = X(n) B from X(1) = B.

    Returns ``(code, n, delta, period, X)`` where ``X`` is the last iterate,
    ``n`` its index and ``delta`` the last successive max-entry difference.
    Thresholds scale with ``min(1, max|X(n)|)``. A lag-``p`` match only counts
    towards an oscillation while the lag-1 difference is at least
    ``osc_floor`` (relative), which keeps slowly settling transients with a
    negative or rotating second eigenvalue from being read as cycles.
    """
    d = B.shape[0]
    size = window + 1
    hist = np.empty((size, d, d), dtype=np.complex128)
    stable = np.zeros(size, dtype=np.int64)
    n = 1
    hist[1 % size] = B
    X = hist[1 % size]
    m = max_abs_nb(X)
    # X(0) is the identity
    delta = 0.0
    for i in range(d):
        for j in range(d):
            e = B[i, j] - 1.0 if i == j else B[i, j]
            if abs(e) > delta:
                delta = abs(e)
    if not np.isfinite(m):
        return OVERFLOW, n, delta, 0, X.copy()
    if m <= zero_tol:
        return ZERO, n, delta, 0, X.copy()
    stable1 = 0
    while n < max_iter:
        Y = matmul_into_nb(X, B, hist[(n + 1) % size])
        n += 1
        m = max_abs_nb(Y)
        delta = max_abs_diff_nb(Y, X)
        if not (np.isfinite(m) and np.isfinite(delta)):
            return OVERFLOW, n, delta, 0, Y.copy()
        if m <= zero_tol:
            return ZERO, n, delta, 0, Y.copy()
        thr = conv_tol * min(1.0, m)
        if delta <= thr:
            stable1 += 1
            stable[:] = 0
            if stable1 >= window:
                return NONZERO, n, delta, 0, Y.copy()
        elif delta < osc_floor * min(1.0, m):
            # still settling: a decaying transient, not a cycle
            stable1 = 0
            stable[:] = 0
        else:
            stable1 = 0
            found = 0
            for p in range(2, window + 1):
                if n - p < 1:
                    break
                if max_abs_diff_nb(Y, hist[(n - p) % size]) <= thr:
                    stable[p] += 1
                else:
                    stable[p] = 0
                if found == 0 and stable[p] >= window:
                    found = p
            if found:
                return OSCILLATES, n, delta, found, Y.copy()
        X = Y
    return INCONCLUSIVE, n, delta, 0, X.copy()


def matmul_np(A, B):
    # callers check finiteness themselves
    with np.errstate(over="ignore", invalid="ignore"):
        return np.matmul(A, B)


def max_abs_np(A):
    return float(np.max(np.abs(A))) if A.size else 0.0


def max_abs_diff_np(A, B):
    return float(np.max(np.abs(A - B))) if A.size else 0.0


def iterate_np(B, conv_tol, zero_tol, max_iter, window, osc_floor):
    """Vectorised twin of :func:`iterate_nb`; same control flow, same codes."""
    d = B.shape[0]
    size = window + 1
    hist = np.empty((size, d, d), dtype=np.complex128)
    stable = np.zeros(size, dtype=np.int64)
    n = 1
    hist[1 % size] = B
    X = hist[1 % size]
    m = max_abs_np(X)
    delta = max_abs_diff_np(X, np.eye(d))
    if not np.isfinite(m):
        return OVERFLOW, n, delta, 0, X.copy()
    if m <= zero_tol:
        return ZERO, n, delta, 0, X.copy()
    stable1 = 0
    with np.errstate(over="ignore", invalid="ignore"):
        while n < max_iter:
            Y = np.matmul(X, B, out=hist[(n + 1) % size])
            n += 1
            m = max_abs_np(Y)
            delta = max_abs_diff_np(Y, X)
            if not (np.isfinite(m) and np.isfinite(delta)):
                return OVERFLOW, n, delta, 0, Y.copy()
            if m <= zero_tol:
                return ZERO, n, delta, 0, Y.copy()
            thr = conv_tol * min(1.0, m)
            if delta <= thr:
                stable1 += 1
                stable[:] = 0
                if stable1 >= window:
                    return NONZERO, n, delta, 0, Y.copy()
                X = Y
                continue
            stable1 = 0
            if delta < osc_floor * min(1.0, m):
                stable[:] = 0
                X = Y
                continue
            lags = np.arange(2, min(window, n - 1) + 1)
            if lags.size:
                past = hist[(n - lags) % size]
                dp = np.abs(past - Y).reshape(lags.size, -1).max(axis=1)
                hit = dp <= thr
                stable[lags] = np.where(hit, stable[lags] + 1, 0)
                done = lags[stable[lags] >= window]
                if done.size:
                    return OSCILLATES, n, delta, int(done[0]), Y.copy()
            X = Y
    return INCONCLUSIVE, n, delta, 0, X.copy()


if BACKEND == "numba":
    matmul = matmul_nb
    max_abs = max_abs_nb
    max_abs_diff = max_abs_diff_nb
    iterate_kernel = iterate_nb
else:
    matmul = matmul_np
    max_abs = max_abs_np
    max_abs_diff = max_abs_diff_np
    iterate_kernel = iterate_np
