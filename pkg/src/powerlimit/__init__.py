"""Convergence of powers of complex matrices with unit column modulus sums."""
from ._accel import BACKEND
from .classify import ConditionDiagnostics, ConvergenceClass, Verdict, classify, is_positive_real
from .generator import Family, MatrixFamily, generate
from .io import MatrixFileError, parse_matrix_file
from .iteration import IterationConfig, IterationOutcome, IterationVerdict, fixed_point_residual, iterate
from .matrix import (
    DimensionError,
    NormalizationReport,
    column_abs_sums,
    max_abs_diff,
    multiply,
    power,
    validate_normalized,
)
from .report import AnalysisReport, analyze
from .stochastic import ConvergenceError, StationaryVector, rank_one_limit, stationary_vector
from .transforms import PhaseTwist, is_likewise, modulus_matrix, phase_twist

__version__ = "0.1.0"
