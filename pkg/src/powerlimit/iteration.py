"""Numeric ground truth for the power sequence B, B^2, B^3, ...

The sequence is advanced one multiplication at a time, never by squaring, so
that every index is observed and oscillation periods can be read off.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from . import kernels
from .matrix import as_matrix, max_abs_diff, multiply


class IterationOutcome(str, Enum):
    NONZERO_LIMIT = "NonzeroLimit"
    ZERO_LIMIT = "ZeroLimit"
    OSCILLATES = "Oscillates"
    INCONCLUSIVE = "Inconclusive"


_CODES = {
    kernels.NONZERO: IterationOutcome.NONZERO_LIMIT,
    kernels.ZERO: IterationOutcome.ZERO_LIMIT,
    kernels.OSCILLATES: IterationOutcome.OSCILLATES,
    kernels.INCONCLUSIVE: IterationOutcome.INCONCLUSIVE,
}


@dataclass(frozen=True)
class IterationConfig:
    """Stopping rules for :func:`iterate`.

    ``conv_tol`` bounds the successive difference relative to the iterate's
    largest entry (capped at an absolute ``conv_tol``), so a slowly decaying
    sequence is never mistaken for a converged one. ``oscillation_floor`` is
    the smallest relative lag-1 difference that still counts as a cycle.
    """

    conv_tol: float = 1e-10
    zero_tol: float = 1e-12
    max_iter: int = 100_000
    oscillation_window: int = 8
    oscillation_floor: float = 1e-5

    def __post_init__(self):
        if not self.conv_tol > 0:
            raise ValueError("conv_tol must be positive")
        if not self.zero_tol > 0:
            raise ValueError("zero_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be a positive integer")
        if not 0 < self.oscillation_floor < 1:
            raise ValueError("oscillation_floor must lie in (0, 1)")
        if self.oscillation_window < 2:
            raise ValueError("oscillation_window must be at least 2")


@dataclass(frozen=True)
class IterationVerdict:
    verdict: IterationOutcome
    limit: Optional[np.ndarray]
    iterations_used: int
    final_step_delta: float
    period_detected: Optional[int] = None
    final_max_modulus: float = float("nan")

    def __post_init__(self):
        if (self.limit is not None) != (self.verdict is IterationOutcome.NONZERO_LIMIT):
            raise ValueError("limit is present exactly for NonzeroLimit")
        if (self.period_detected is not None) != (self.verdict is IterationOutcome.OSCILLATES):
            raise ValueError("period_detected is present exactly for Oscillates")


def iterate(B, cfg=None):
    """Follow X(n+1) = X(n) B from X(1) = B and classify the outcome.

    Raises ``OverflowError`` if an iterate stops being finite, which only
    happens when some column modulus sum exceeds one.

    >>> iterate([[0.5, 0.5], [0.5, 0.5]]).verdict.value
    'NonzeroLimit'
    """
    cfg = cfg or IterationConfig()
    B = as_matrix(B)
    code, n, delta, period, X = kernels.iterate_kernel(
        B, float(cfg.conv_tol), float(cfg.zero_tol), int(cfg.max_iter),
        int(cfg.oscillation_window), float(cfg.oscillation_floor),
    )
    if code == kernels.OVERFLOW:
        raise OverflowError(f"iterate {n} is not finite; column modulus sums exceed 1?")
    outcome = _CODES[int(code)]
    return IterationVerdict(
        verdict=outcome,
        limit=X if outcome is IterationOutcome.NONZERO_LIMIT else None,
        iterations_used=int(n),
        final_step_delta=float(delta),
        period_detected=int(period) if outcome is IterationOutcome.OSCILLATES else None,
        final_max_modulus=float(np.max(np.abs(X))),
    )


def fixed_point_residual(X, B):
    """Larger of ``max|XB - X|`` and ``max|BX - X|``.

    A limit of the power sequence satisfies both X = XB and X = BX.
    """
    X, B = as_matrix(X), as_matrix(B)
    return max(max_abs_diff(multiply(X, B), X), max_abs_diff(multiply(B, X), X))
