import argparse
import csv
import json
import logging
import math
import sys
from typing import Any, Dict, List, Optional, TextIO

import numpy as np

from biharmonic.cli.sources import resolve_source
from biharmonic.config_manager import ConfigManager
from biharmonic.constructors import GALLERY, gallery_names, named_form
from biharmonic.errors import InvalidArgument, WrongDimensions
from biharmonic.fields import AnalysisReport, classify
from biharmonic.maps import LAPLACIAN_CONVENTION, PolyMap, sphere_restriction_check
from biharmonic.numcheck import (
    RefereeReport,
    derivative_checks,
    referee_analysis,
    sample_for,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_NOT_SPHERE_MAP = 3
EXIT_ROUTE_DISAGREEMENT = 4


def _numcheck_settings(args: argparse.Namespace) -> Dict[str, Any]:
    settings = dict(ConfigManager.get_settings()["numcheck"])
    for key in ("seed", "points", "tol"):
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    if settings["points"] < 1:
        raise InvalidArgument(f"--points must be at least 1, got {settings['points']}")
    return settings


def analysis_payload(
    source: str, report: AnalysisReport, referee: RefereeReport
) -> Dict[str, Any]:
    """The JSON document printed by ``analyze``; key order is part of the output."""
    body = report.to_dict()
    return {
        "source": source,
        "convention": body["convention"],
        "meta": body["meta"],
        "verdicts": body["verdicts"],
        "tension": body["tension"],
        "bitension": body["bitension"],
        "energy_density": body["energy_density"],
        "route": body["route"],
        "route_agreement": body["route_agreement"],
        "differing_components": body["differing_components"],
        "numeric_check": referee.to_dict(),
    }


def _render_components(label: str, components: List[str]) -> List[str]:
    lines = [f"{label}:"]
    lines.extend(f"  [{i}] {text}" for i, text in enumerate(components))
    return lines


def render_human(source: str, report: AnalysisReport, referee: RefereeReport) -> str:
    fields = report.meta.to_dict().items()
    meta = ", ".join(f"{k}={v}" for k, v in fields if k != "kind")
    lines = [
        f"Map {source}: {report.meta.kind.value} ({meta})",
        f"Convention: {LAPLACIAN_CONVENTION}",
        f"Verdict: {report.verdict}",
    ]
    lines += _render_components("Tension", report.tension.to_strings())
    lines += _render_components("Bitension", report.bitension.to_strings())
    lines.append(f"Energy density: {report.energy}")
    if report.route_agreement:
        lines.append(f"Routes: {report.route} and general agree")
    else:
        lines.append(
            f"Routes DISAGREE: tension components {list(report.tension_mismatch)}, "
            f"bitension components {list(report.bitension_mismatch)}"
        )
        lines += _render_components(
            "General-route bitension", report.general_bitension.to_strings()
        )
    if report.terms:
        lines.append(f"Bitension terms: {', '.join(report.terms)}")
    status = "passed" if referee.passed else "FAILED"
    lines.append(
        f"Numeric check {status}: {referee.points} points, seed {referee.seed}, "
        f"max residual {referee.max_residual:.3g} (tol {referee.tol:g}), "
        f"{referee.derivative_checks} derivative checks"
    )
    if referee.nonzero_witness is not None:
        witness = referee.nonzero_witness
        lines.append(
            f"Nonzero witness: {witness.field}[{witness.component}] = "
            f"{witness.value:.6g} at sample {witness.point_index}"
        )
    return "\n".join(lines)


def run_analyze(args: argparse.Namespace, out: TextIO = sys.stdout) -> int:
    settings = _numcheck_settings(args)
    resolved = resolve_source(args.source)
    report = classify(resolved.map, resolved.hint)
    samples = sample_for(report.meta, settings["points"], settings["seed"])
    derivatives = derivative_checks(resolved.map, samples, settings)
    referee = referee_analysis(
        report,
        samples,
        settings["tol"],
        settings["witness_threshold"],
        derivatives,
    )

    if args.human:
        out.write(render_human(resolved.text, report, referee) + "\n")
    else:
        payload = analysis_payload(resolved.text, report, referee)
        out.write(json.dumps(payload, indent=2) + "\n")

    if not report.route_agreement:
        logger.error("Symbolic routes disagree; this is a bug or a formula discrepancy")
        return EXIT_ROUTE_DISAGREEMENT
    if not referee.passed:
        logger.error(f"Numeric referee failed: {'; '.join(referee.failures)}")
        return EXIT_ERROR
    return EXIT_OK


def run_construct(args: argparse.Namespace, out: TextIO = sys.stdout) -> int:
    resolved = resolve_source(args.expression)
    meta = sphere_restriction_check(resolved.map, resolved.hint)
    if args.json:
        payload = {
            "source": resolved.text,
            "nvars": resolved.map.nvars,
            "components": resolved.map.to_strings(),
            "meta": meta.to_dict(),
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"# {resolved.text}: {json.dumps(meta.to_dict())}\n")
        out.write("[" + ", ".join(resolved.map.to_strings()) + "]\n")
    return EXIT_OK


def run_gallery(args: argparse.Namespace, out: TextIO = sys.stdout) -> int:
    parametric = gallery_names()[len(GALLERY) :]
    if args.json:
        entries = [named_form(name).to_dict() for name in GALLERY]
        payload = {"entries": entries, "parametric": parametric}
        out.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_OK
    for name, (_, provenance) in GALLERY.items():
        out.write(f"{name:<10} {provenance}\n")
    for name in parametric:
        out.write(f"{name:<10} parametric family\n")
    return EXIT_OK


def curve_rows(F: PolyMap, samples: int) -> np.ndarray:
    """(samples, 5) array of t and the four components at (cos t, sin t)."""
    t = 2 * math.pi * np.arange(samples) / samples
    points = np.stack([np.cos(t), np.sin(t)], axis=1)
    return np.column_stack([t, F.evaluate_many(points)])


def write_curve(rows: np.ndarray, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["t", "u1", "u2", "u3", "u4"])
    for row in rows:
        writer.writerow([format(float(value), ".17g") for value in row])


def run_emit_curve(args: argparse.Namespace, out: TextIO = sys.stdout) -> int:
    if args.samples < 1:
        raise WrongDimensions(f"--samples must be at least 1, got {args.samples}")
    resolved = resolve_source(args.source)
    meta = sphere_restriction_check(resolved.map, resolved.hint)
    if meta.blocks != (2,) or len(resolved.map) != 4:
        raise WrongDimensions(
            "emit-curve needs a map from S^1 with 4 components",
            [f"domain blocks: {meta.blocks}", f"components: {len(resolved.map)}"],
        )
    rows = curve_rows(resolved.map, args.samples)
    if args.out:
        with open(args.out, "w", newline="") as handle:
            write_curve(rows, handle)
        logger.info(f"Wrote {args.samples} curve samples to {args.out}")
    else:
        write_curve(rows, out)
    return EXIT_OK


def run_init_config(args: argparse.Namespace, out: TextIO = sys.stdout) -> int:
    response = ConfigManager.generate_config(overwrite=args.overwrite)
    out.write(json.dumps(response, indent=2) + "\n")
    return EXIT_OK if response["success"] else EXIT_ERROR


def run_verify_paper(args: argparse.Namespace, out: TextIO = sys.stdout) -> int:
    from biharmonic.cli.battery import run_battery

    workers: Optional[int] = args.workers
    if workers is None:
        workers = ConfigManager.get_settings()["verify"]["workers"]
    results = run_battery(args.filter, workers)
    for result in results:
        out.write(result.render() + "\n")
    failed = [r for r in results if not r.passed]
    out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_ERROR if failed else EXIT_OK
