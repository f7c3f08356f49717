"""Analytic test for convergence of B^n to a nonzero matrix.

Applies to square matrices with nonzero entries whose column modulus sums are
all one. For d = 2 the powers converge to a nonzero limit iff both diagonal
entries are positive real and ``b12 * b21`` is positive real (with ``b12``
not negative real). For d >= 3 the condition is that every entry is
positive real.
"""
import cmath
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .matrix import NORMALIZATION_TOL, ZERO_THRESHOLD, as_matrix, validate_normalized

ANGULAR_TOL = 1e-9
# Fixed so that widening ``tol`` never turns a near-negative b12 into an exclusion.
NEGATIVE_REAL_TOL = 1e-12


class Verdict(str, Enum):
    NONZERO_LIMIT = "NonzeroLimit"
    NO_NONZERO_LIMIT = "NoNonzeroLimit"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class ConditionDiagnostics:
    """Per-condition outcomes.

    ``offdiag_product_positive`` is filled for d = 2 and
    ``all_entries_positive_real`` for d >= 3; the other one is ``None``.
    """

    diagonal_positive_real: tuple
    offdiag_negative_real_present: bool
    tolerance_used: float
    offdiag_product_positive: Optional[bool] = None
    all_entries_positive_real: Optional[bool] = None

    def to_dict(self):
        return {
            "diagonal_positive_real": list(self.diagonal_positive_real),
            "offdiag_product_positive": self.offdiag_product_positive,
            "offdiag_negative_real_present": self.offdiag_negative_real_present,
            "all_entries_positive_real": self.all_entries_positive_real,
            "tolerance_used": self.tolerance_used,
        }

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        data["diagonal_positive_real"] = tuple(data["diagonal_positive_real"])
        return cls(**data)


@dataclass(frozen=True)
class ConvergenceClass:
    verdict: Verdict
    diagnostics: Optional[ConditionDiagnostics]
    scope_reason: Optional[str] = None

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "diagnostics": self.diagnostics.to_dict() if self.diagnostics else None,
            "scope_reason": self.scope_reason,
        }

    @classmethod
    def from_dict(cls, data):
        diag = data.get("diagnostics")
        return cls(
            verdict=Verdict(data["verdict"]),
            diagnostics=ConditionDiagnostics.from_dict(diag) if diag else None,
            scope_reason=data.get("scope_reason"),
        )


def is_positive_real(z, tol=ANGULAR_TOL):
    if not tol > 0:
        raise ValueError("tol must be positive")
    z = complex(z)
    return abs(z.imag) <= tol and z.real > tol


def _is_negative_real(z):
    z = complex(z)
    return abs(z.imag) <= NEGATIVE_REAL_TOL and z.real < -NEGATIVE_REAL_TOL


def _diagnose(M, tol):
    d = M.shape[0]
    diag = tuple(is_positive_real(M[i, i], tol) for i in range(d))
    neg = any(_is_negative_real(M[i, j]) for i in range(d) for j in range(d) if i != j)
    if d == 2:
        prod = complex(M[0, 1]) * complex(M[1, 0])
        return ConditionDiagnostics(
            diagonal_positive_real=diag,
            offdiag_negative_real_present=neg,
            tolerance_used=tol,
            offdiag_product_positive=prod != 0 and abs(cmath.phase(prod)) <= tol,
        )
    every = all(is_positive_real(z, tol) for z in M.ravel())
    return ConditionDiagnostics(
        diagonal_positive_real=diag,
        offdiag_negative_real_present=neg,
        tolerance_used=tol,
        all_entries_positive_real=every,
    )


def classify(M, tol=ANGULAR_TOL, norm_tol=NORMALIZATION_TOL, zero_threshold=ZERO_THRESHOLD):
    """Decide from the entries alone whether ``M**n`` tends to a nonzero matrix.

    ``tol`` is both the positive-real tolerance and the angular tolerance for
    ``arg(b12 * b21)``. Inputs outside the standing assumptions (d < 2, a zero
    entry, a column modulus sum away from one) yield ``OutOfScope``.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    M = as_matrix(M)
    d = M.shape[0]
    if d < 2:
        return ConvergenceClass(Verdict.OUT_OF_SCOPE, None, "dimension must be at least 2")
    diagnostics = _diagnose(M, tol)
    report = validate_normalized(M, norm_tol, zero_threshold)
    if not report.all_nonzero:
        return ConvergenceClass(
            Verdict.OUT_OF_SCOPE,
            diagnostics,
            f"zero entry (min modulus {report.min_modulus:.3g} <= {zero_threshold:g})",
        )
    if not report.normalized:
        return ConvergenceClass(
            Verdict.OUT_OF_SCOPE,
            diagnostics,
            f"column modulus sums deviate from 1 by {report.max_deviation:.3g}",
        )

    if d == 2:
        ok = (
            all(diagnostics.diagonal_positive_real)
            and diagnostics.offdiag_product_positive
            # b12 = -|b12| forces b21 negative too; treated as no nonzero limit
            and not _is_negative_real(M[0, 1])
        )
    else:
        ok = diagnostics.all_entries_positive_real
    return ConvergenceClass(Verdict.NONZERO_LIMIT if ok else Verdict.NO_NONZERO_LIMIT, diagnostics)
