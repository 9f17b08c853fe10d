import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import numpy as np

from biharmonic.fields import AnalysisReport
from biharmonic.maps import PolyMap, euclidean_laplacian, grad_norm_squared
from biharmonic.numcheck.sampling import SampleSet
from biharmonic.polyalg import Polynomial

logger = logging.getLogger(__name__)

Field = Union[PolyMap, Polynomial]


def _values(F: Field, samples: SampleSet) -> np.ndarray:
    if isinstance(F, Polynomial):
        return F.evaluate_many(samples.points)[:, None]
    return F.evaluate_many(samples.points)


@dataclass(frozen=True)
class Witness:
    """A sample at which a field is visibly nonzero."""

    field: str
    point_index: int
    component: int
    value: float
    point: List[float]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "field": self.field,
            "point_index": self.point_index,
            "component": self.component,
            "value": self.value,
            "point": self.point,
        }


@dataclass(frozen=True)
class ZeroCheckReport:
    passed: bool
    max_residual: float
    tol: float
    points: int


def numeric_zero_check(F: Field, samples: SampleSet, tol: float) -> ZeroCheckReport:
    """Largest |component| over the samples; passes when it is at most ``tol``."""
    residual = float(np.max(np.abs(_values(F, samples))))
    return ZeroCheckReport(
        passed=residual <= tol, max_residual=residual, tol=tol, points=samples.count
    )


def find_witness(
    F: Field, samples: SampleSet, threshold: float, label: str = "field"
) -> Optional[Witness]:
    """The sample with the largest |component|, when that exceeds ``threshold``."""
    values = np.abs(_values(F, samples))
    index = np.unravel_index(int(np.argmax(values)), values.shape)
    row, column = int(index[0]), int(index[1])
    if values[row, column] <= threshold:
        return None
    signed = _values(F, samples)[row, column]
    return Witness(
        field=label,
        point_index=row,
        component=column,
        value=float(signed),
        point=[float(x) for x in samples.points[row]],
    )


@dataclass(frozen=True)
class DerivativeCheckReport:
    """Worst symbolic-versus-numeric mismatch, in units of the allowed error."""

    passed: bool
    worst_ratio: float
    max_abs_error: float
    points: int


def _grade(
    symbolic: np.ndarray, numeric: np.ndarray, rel_tol: float, abs_tol: float
) -> Tuple[float, float]:
    error = np.abs(symbolic - numeric)
    allowed = np.maximum(rel_tol * np.abs(symbolic), abs_tol)
    ratio = float(np.max(error / allowed)) if error.size else 0.0
    return ratio, float(np.max(error)) if error.size else 0.0


def finite_diff_check(
    p: Polynomial,
    samples: SampleSet,
    step: float = 1e-5,
    rel_tol: float = 1e-4,
    abs_tol: float = 1e-6,
) -> DerivativeCheckReport:
    """
    Central differences of ``p`` against every symbolic partial derivative.

    An entry passes when its error is within ``rel_tol`` relative, or within
    ``abs_tol`` absolute near zeros.
    """
    points = samples.points
    worst, largest = 0.0, 0.0
    for i in range(p.nvars):
        offset = np.zeros(p.nvars)
        offset[i] = step
        forward = p.evaluate_many(points + offset)
        backward = p.evaluate_many(points - offset)
        numeric = (forward - backward) / (2 * step)
        symbolic = p.partial(i).evaluate_many(points)
        ratio, error = _grade(symbolic, numeric, rel_tol, abs_tol)
        worst, largest = max(worst, ratio), max(largest, error)
    return DerivativeCheckReport(
        passed=worst <= 1.0,
        worst_ratio=worst,
        max_abs_error=largest,
        points=samples.count,
    )


def laplacian_stencil_check(
    p: Polynomial,
    samples: SampleSet,
    step: float = 1e-4,
    rel_tol: float = 1e-4,
    abs_tol: float = 1e-6,
) -> DerivativeCheckReport:
    """Second-order stencil of -sum d^2p/dx_i^2 against euclidean_laplacian."""
    points = samples.points
    centre = p.evaluate_many(points)
    total = np.zeros(points.shape[0])
    for i in range(p.nvars):
        offset = np.zeros(p.nvars)
        offset[i] = step
        forward = p.evaluate_many(points + offset)
        backward = p.evaluate_many(points - offset)
        total += (forward - 2 * centre + backward) / (step * step)
    symbolic = euclidean_laplacian(p).evaluate_many(points)
    ratio, error = _grade(symbolic, -total, rel_tol, abs_tol)
    return DerivativeCheckReport(
        passed=ratio <= 1.0,
        worst_ratio=ratio,
        max_abs_error=error,
        points=samples.count,
    )


@dataclass(frozen=True)
class RefereeReport:
    """Numeric confirmation of a symbolic verdict on tension and bitension."""

    seed: int
    points: int
    tol: float
    max_residual: float
    nonzero_witness: Optional[Witness]
    passed: bool
    failures: List[str]
    derivative_checks: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "points": self.points,
            "tol": self.tol,
            "max_residual": self.max_residual,
            "nonzero_witness": (
                None if self.nonzero_witness is None else self.nonzero_witness.to_dict()
            ),
            "derivative_checks": self.derivative_checks,
            "passed": self.passed,
        }


def referee_report(
    fields: Dict[str, Tuple[Field, bool]],
    samples: SampleSet,
    tol: float,
    witness_threshold: float,
    derivatives: Optional[Dict[str, DerivativeCheckReport]] = None,
) -> RefereeReport:
    """
    Confirm symbolic verdicts numerically.

    Args:
        fields: label -> (field, whether it is symbolically zero on the domain).
            Fields may be unreduced; only their values on the samples matter.
        samples: Points on the domain
        tol: Largest residual allowed for a zero field
        witness_threshold: A nonzero field must exceed this somewhere
        derivatives: Optional derivative cross-checks; any failure fails the report

    Returns:
        RefereeReport; the reported witness is the first nonzero field's
    """
    max_residual = 0.0
    witness: Optional[Witness] = None
    failures: List[str] = []
    for label, (field, expect_zero) in fields.items():
        if expect_zero:
            check = numeric_zero_check(field, samples, tol)
            max_residual = max(max_residual, check.max_residual)
            if not check.passed:
                failures.append(f"{label} residual {check.max_residual:.3g} > {tol}")
            continue
        found = find_witness(field, samples, witness_threshold, label)
        if found is None:
            failures.append(
                f"{label} is symbolically nonzero but no sample exceeds "
                f"{witness_threshold}"
            )
        elif witness is None:
            witness = found
    derivatives = derivatives or {}
    for label, derivative in derivatives.items():
        if not derivative.passed:
            failures.append(
                f"{label} derivative check off by "
                f"{derivative.worst_ratio:.3g}x tolerance"
            )
    for failure in failures:
        logger.warning(f"Numeric referee: {failure}")
    return RefereeReport(
        seed=samples.seed,
        points=samples.count,
        tol=tol,
        max_residual=max_residual,
        nonzero_witness=witness,
        passed=not failures,
        failures=failures,
        derivative_checks=len(derivatives),
    )


def derivative_checks(
    F: PolyMap, samples: SampleSet, settings: Mapping[str, Any]
) -> Dict[str, DerivativeCheckReport]:
    """Central differences on |dF|^2 and a Laplacian stencil on every component."""
    reports = {
        "energy_gradient": finite_diff_check(
            grad_norm_squared(F),
            samples,
            settings["fd_step"],
            settings["fd_rel_tol"],
            settings["fd_abs_tol"],
        )
    }
    for i, component in enumerate(F):
        reports[f"laplacian[{i}]"] = laplacian_stencil_check(
            component,
            samples,
            settings["laplacian_step"],
            settings["laplacian_tol"],
            settings["fd_abs_tol"],
        )
    return reports


def referee_analysis(
    report: AnalysisReport,
    samples: SampleSet,
    tol: float,
    witness_threshold: float,
    derivatives: Optional[Dict[str, DerivativeCheckReport]] = None,
) -> RefereeReport:
    """Referee both routes of an analysis, plus the unreduced sum of the named terms."""
    fields: Dict[str, Tuple[Field, bool]] = {
        "tension": (report.tension, report.is_harmonic),
        "bitension": (report.bitension, report.is_biharmonic),
        "general_tension": (report.general_tension, report.general_tension.is_zero()),
        "general_bitension": (
            report.general_bitension,
            report.general_bitension.is_zero(),
        ),
    }
    if report.terms:
        unreduced = PolyMap.zero(len(report.bitension), report.bitension.nvars)
        for term in report.terms.values():
            unreduced = unreduced + term
        fields["bitension_terms"] = (unreduced, report.is_biharmonic)
    return referee_report(fields, samples, tol, witness_threshold, derivatives)
