import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from biharmonic.errors import FactorsNotHarmonic
from biharmonic.fields.diagonal import (
    bitension_diagonal,
    bitension_diagonal_terms,
    tension_diagonal,
)
from biharmonic.fields.general import BitensionWorksheet, general_route_for
from biharmonic.fields.homogeneous import (
    bitension_homogeneous,
    bitension_homogeneous_terms,
    tension_homogeneous,
)
from biharmonic.fields.product import bitension_product, tension_product
from biharmonic.maps import (
    LAPLACIAN_CONVENTION,
    MapKind,
    PolyMap,
    SphereMapMeta,
    energy_density,
    sphere_restriction_check,
)
from biharmonic.maps.restriction import Expectation
from biharmonic.polyalg import Polynomial

logger = logging.getLogger(__name__)

SPECIALISED_ROUTES = {
    MapKind.HOMOGENEOUS: ("homogeneous", tension_homogeneous, bitension_homogeneous),
    MapKind.DIAGONAL: ("diagonal", tension_diagonal, bitension_diagonal),
    MapKind.PRODUCT: ("product", tension_product, bitension_product),
}


def differing_components(first: PolyMap, second: PolyMap) -> Tuple[int, ...]:
    return tuple(i for i, (a, b) in enumerate(zip(first, second)) if a != b)


@dataclass(frozen=True)
class AnalysisReport:
    """
    Tension, bitension and verdicts of a verified sphere map.

    ``tension`` and ``bitension`` come from the kind-specific closed forms; the
    ``general_*`` fields come from the reference route. For product maps whose
    factors are not harmonic only the reference route runs and ``route`` is
    ``"product-general"``.
    """

    meta: SphereMapMeta
    tension: PolyMap
    bitension: PolyMap
    energy: Polynomial
    route: str
    general_tension: PolyMap
    general_bitension: PolyMap
    worksheet: BitensionWorksheet
    tension_mismatch: Tuple[int, ...] = ()
    bitension_mismatch: Tuple[int, ...] = ()
    terms: Dict[str, PolyMap] = field(default_factory=dict)

    @property
    def is_harmonic(self) -> bool:
        return self.tension.is_zero()

    @property
    def is_biharmonic(self) -> bool:
        return self.bitension.is_zero()

    @property
    def is_proper_biharmonic(self) -> bool:
        return self.is_biharmonic and not self.is_harmonic

    @property
    def route_agreement(self) -> bool:
        return not self.tension_mismatch and not self.bitension_mismatch

    @property
    def verdict(self) -> str:
        if self.is_harmonic:
            return "harmonic"
        if self.is_biharmonic:
            return "proper biharmonic"
        return "not biharmonic"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "convention": LAPLACIAN_CONVENTION,
            "meta": self.meta.to_dict(),
            "verdicts": {
                "harmonic": self.is_harmonic,
                "biharmonic": self.is_biharmonic,
                "proper_biharmonic": self.is_proper_biharmonic,
            },
            "tension": self.tension.to_strings(),
            "bitension": self.bitension.to_strings(),
            "energy_density": str(self.energy),
            "route": self.route,
            "route_agreement": self.route_agreement,
            "differing_components": {
                "tension": list(self.tension_mismatch),
                "bitension": list(self.bitension_mismatch),
            },
        }


def analyze(F: PolyMap, meta: SphereMapMeta) -> AnalysisReport:
    """Run both routes on an already verified map."""
    route_name, tension_fn, bitension_fn = SPECIALISED_ROUTES[meta.kind]
    reference = general_route_for(F, meta)
    try:
        tension = tension_fn(F, meta)
        bitension = bitension_fn(F, meta)
    except FactorsNotHarmonic as error:
        logger.info(f"Closed forms skipped: {error.message}")
        return AnalysisReport(
            meta=meta,
            tension=reference.tension,
            bitension=reference.bitension,
            energy=energy_density(F, meta),
            route="product-general",
            general_tension=reference.tension,
            general_bitension=reference.bitension,
            worksheet=reference.worksheet,
        )

    terms: Dict[str, PolyMap] = {}
    if meta.kind is MapKind.HOMOGENEOUS:
        terms = bitension_homogeneous_terms(F, meta)
    elif meta.kind is MapKind.DIAGONAL:
        terms = bitension_diagonal_terms(F, meta)

    report = AnalysisReport(
        meta=meta,
        tension=tension,
        bitension=bitension,
        energy=energy_density(F, meta),
        route=route_name,
        general_tension=reference.tension,
        general_bitension=reference.bitension,
        worksheet=reference.worksheet,
        tension_mismatch=differing_components(tension, reference.tension),
        bitension_mismatch=differing_components(bitension, reference.bitension),
        terms=terms,
    )
    if not report.route_agreement:
        logger.warning(
            f"Routes disagree on {route_name} map: tension components "
            f"{list(report.tension_mismatch)}, bitension components "
            f"{list(report.bitension_mismatch)}"
        )
    return report


def classify(F: PolyMap, expected: Optional[Expectation] = None) -> AnalysisReport:
    """
    Verify F and return its full analysis.

    Args:
        F: Candidate map
        expected: Optional kind hint or metadata, passed to sphere_restriction_check

    Returns:
        AnalysisReport

    Raises:
        NotASphereMap: when F does not restrict to a sphere map
    """
    meta = sphere_restriction_check(F, expected)
    report = analyze(F, meta)
    logger.info(f"{meta.kind.value} map classified as {report.verdict}")
    return report
