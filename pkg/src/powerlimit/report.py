"""Side-by-side analytic and numeric verdicts for one matrix."""
import hashlib
import json
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .classify import ANGULAR_TOL, ConvergenceClass, Verdict, classify
from .io import dump_matrix, entries_to_json, parse_matrix_document
from .iteration import IterationConfig, IterationOutcome, IterationVerdict, fixed_point_residual, iterate
from .matrix import NORMALIZATION_TOL, ZERO_THRESHOLD, NormalizationReport, as_matrix, validate_normalized


def matrix_digest(M):
    """sha256 of the canonical JSON form of ``M``."""
    blob = json.dumps(dump_matrix(M), separators=(",", ":"), sort_keys=True)
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


def verdict_to_dict(v, overflow=False):
    return {
        "verdict": v.verdict.value,
        "limit": entries_to_json(v.limit) if v.limit is not None else None,
        "iterations_used": v.iterations_used,
        "final_step_delta": v.final_step_delta,
        "period_detected": v.period_detected,
        "overflow": overflow,
    }


def verdict_from_dict(data):
    limit = data.get("limit")
    return IterationVerdict(
        verdict=IterationOutcome(data["verdict"]),
        limit=parse_matrix_document({"d": len(limit), "entries": limit}) if limit is not None else None,
        iterations_used=data["iterations_used"],
        final_step_delta=data["final_step_delta"],
        period_detected=data.get("period_detected"),
    )


@dataclass
class AnalysisReport:
    input_digest: str
    d: int
    normalization: NormalizationReport
    analytic: ConvergenceClass
    numeric: IterationVerdict
    agreement: bool
    limit_summary: Optional[dict] = None
    overflow: bool = False
    timings: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "input_digest": self.input_digest,
            "d": self.d,
            "normalization": self.normalization.to_dict(),
            "analytic": self.analytic.to_dict(),
            "numeric": verdict_to_dict(self.numeric, self.overflow),
            "agreement": self.agreement,
            "limit_summary": self.limit_summary,
            "timings": self.timings,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            input_digest=data["input_digest"],
            d=data["d"],
            normalization=NormalizationReport.from_dict(data["normalization"]),
            analytic=ConvergenceClass.from_dict(data["analytic"]),
            numeric=verdict_from_dict(data["numeric"]),
            agreement=data["agreement"],
            limit_summary=data.get("limit_summary"),
            overflow=data["numeric"].get("overflow", False),
            timings=dict(data.get("timings", {})),
        )

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), allow_nan=False, **kwargs)


def verdicts_agree(analytic, numeric):
    if numeric.verdict is IterationOutcome.INCONCLUSIVE:
        return False
    return (analytic.verdict is Verdict.NONZERO_LIMIT) == (numeric.verdict is IterationOutcome.NONZERO_LIMIT)


def analyze(
    M,
    cfg=None,
    classify_tol=ANGULAR_TOL,
    norm_tol=NORMALIZATION_TOL,
    zero_threshold=ZERO_THRESHOLD,
):
    """Run normalisation check, classifier and power iteration on ``M``.

    An overflowing iteration is recorded as ``Inconclusive`` with
    ``overflow=True`` rather than raised.
    """
    cfg = cfg or IterationConfig()
    M = as_matrix(M)
    timings = {}

    t0 = time.perf_counter()
    norm = validate_normalized(M, norm_tol, zero_threshold)
    t1 = time.perf_counter()
    analytic = classify(M, classify_tol, norm_tol, zero_threshold)
    t2 = time.perf_counter()
    overflow = False
    try:
        numeric = iterate(M, cfg)
    except OverflowError:
        overflow = True
        numeric = IterationVerdict(IterationOutcome.INCONCLUSIVE, None, 0, 0.0)
    t3 = time.perf_counter()
    timings.update(normalize=t1 - t0, classify=t2 - t1, iterate=t3 - t2)

    summary = None
    if numeric.limit is not None:
        summary = {
            "max_entry_modulus": float(np.max(np.abs(numeric.limit))),
            "fixed_point_residual": fixed_point_residual(numeric.limit, M),
        }
    return AnalysisReport(
        input_digest=matrix_digest(M),
        d=int(M.shape[0]),
        normalization=norm,
        analytic=analytic,
        numeric=numeric,
        agreement=verdicts_agree(analytic, numeric),
        limit_summary=summary,
        overflow=overflow,
        timings=timings,
    )


def format_text(report):
    r = report
    n = r.normalization
    lines = [
        f"input       {r.input_digest}  (d={r.d})",
        "columns     sums=[{}]  max_dev={:.3g}  min|b|={:.3g}  normalized={}  nonzero={}".format(
            ", ".join(f"{s:.6g}" for s in n.column_sums),
            n.max_deviation,
            n.min_modulus,
            "yes" if n.normalized else "no",
            "yes" if n.all_nonzero else "no",
        ),
        f"analytic    {r.analytic.verdict.value}"
        + (f"  ({r.analytic.scope_reason})" if r.analytic.scope_reason else ""),
    ]
    v = r.numeric
    extra = f", period {v.period_detected}" if v.period_detected else ""
    if r.overflow:
        extra += ", overflow"
    lines.append(
        f"numeric     {v.verdict.value}  after {v.iterations_used} iterations"
        f"  (last step {v.final_step_delta:.3g}{extra})"
    )
    if r.limit_summary:
        lines.append(
            "limit       max|x|={max_entry_modulus:.6g}  fixed-point residual={fixed_point_residual:.3g}".format(
                **r.limit_summary
            )
        )
    lines.append(f"agreement   {'yes' if r.agreement else 'NO'}")
    return "\n".join(lines)
