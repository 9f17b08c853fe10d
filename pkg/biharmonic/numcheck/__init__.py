"""Floating-point referee for the exact symbolic layer."""

from .referee import (
    DerivativeCheckReport,
    RefereeReport,
    Witness,
    ZeroCheckReport,
    derivative_checks,
    find_witness,
    finite_diff_check,
    laplacian_stencil_check,
    numeric_zero_check,
    referee_analysis,
    referee_report,
)
from .sampling import SampleSet, box_muller, sample_for, sample_sphere

__all__ = [
    "DerivativeCheckReport",
    "RefereeReport",
    "SampleSet",
    "Witness",
    "ZeroCheckReport",
    "box_muller",
    "derivative_checks",
    "find_witness",
    "finite_diff_check",
    "laplacian_stencil_check",
    "numeric_zero_check",
    "referee_analysis",
    "referee_report",
    "sample_for",
    "sample_sphere",
]
