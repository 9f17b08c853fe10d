"""Diagonal and product constructions through the Clifford-type product of spheres."""

import logging
from typing import Tuple

from biharmonic.errors import DimensionMismatch, InvalidArgument, NotAForm
from biharmonic.maps import (
    DiagonalMeta,
    PolyMap,
    ProductMeta,
    form_signature,
    sphere_restriction_check,
)
from biharmonic.polyalg import RadicalScalar, sqrt_of_rational
from biharmonic.polyalg.radicals import ScalarLike

logger = logging.getLogger(__name__)


def _split_radii(r1_sq: ScalarLike) -> Tuple[RadicalScalar, RadicalScalar]:
    first = RadicalScalar.coerce(r1_sq)
    if first.is_rational() and not 0 < first.as_rational() < 1:
        raise InvalidArgument(f"r1^2 must lie strictly between 0 and 1, got {first}")
    return first, 1 - first


def _unit_degree(F: PolyMap, label: str, variables=None) -> int:
    signature = form_signature(F.components, variables)
    if signature is None:
        raise NotAForm(f"{label} is not a form", [f"|F|^2 = {F.norm_squared()}"])
    k, c = signature
    if c != 1:
        raise NotAForm(f"{label} must restrict to the unit sphere, got r^2 = {c}")
    return k


def diagonal_sum(
    F1: PolyMap, F2: PolyMap, r1_sq: ScalarLike
) -> Tuple[PolyMap, DiagonalMeta]:
    """
    (r1 F1, r2 F2) on one domain sphere, with r2^2 = 1 - r1^2.

    Args:
        F1: Unit-radius form
        F2: Unit-radius form on the same variables
        r1_sq: Rational squared radius in (0, 1)

    Returns:
        The stacked map and its verified DiagonalMeta

    Raises:
        RadiusNotRepresentable: when r1^2 is not rational
        DimensionMismatch: when F1 and F2 use different variable counts
    """
    if F1.nvars != F2.nvars:
        raise DimensionMismatch(
            f"Diagonal factors need one domain, got {F1.nvars} and {F2.nvars} variables"
        )
    first_sq, second_sq = _split_radii(r1_sq)
    first_radius = sqrt_of_rational(first_sq)
    second_radius = sqrt_of_rational(second_sq)
    k1 = _unit_degree(F1, "First factor")
    k2 = _unit_degree(F2, "Second factor")

    F = F1.scale(first_radius).concat(F2.scale(second_radius))
    expected = DiagonalMeta(
        m=F.nvars - 1,
        k1=k1,
        k2=k2,
        r1_sq=first_sq,
        r2_sq=second_sq,
        split=len(F1),
    )
    meta = sphere_restriction_check(F, expected)
    logger.debug(f"Built diagonal map {meta.to_dict()}")
    return F, meta


def product_map(
    F1: PolyMap, F2: PolyMap, r1_sq: ScalarLike
) -> Tuple[PolyMap, ProductMeta]:
    """
    (r1 F1(x_a), r2 F2(x_b)) on S^m1 x S^m2.

    F1 keeps the first m1 + 1 variables and F2 is renamed onto the next m2 + 1.
    """
    if F1.nvars < 2 or F2.nvars < 2:
        raise DimensionMismatch("Each product factor needs at least 2 variables")
    first_sq, second_sq = _split_radii(r1_sq)
    first_radius = sqrt_of_rational(first_sq)
    second_radius = sqrt_of_rational(second_sq)
    k1 = _unit_degree(F1, "First factor")
    k2 = _unit_degree(F2, "Second factor")

    nvars = F1.nvars + F2.nvars
    F = (
        F1.embed(nvars, 0)
        .scale(first_radius)
        .concat(F2.embed(nvars, F1.nvars).scale(second_radius))
    )
    expected = ProductMeta(
        m1=F1.nvars - 1,
        m2=F2.nvars - 1,
        k1=k1,
        k2=k2,
        r1_sq=first_sq,
        r2_sq=second_sq,
        split=len(F1),
    )
    meta = sphere_restriction_check(F, expected)
    logger.debug(f"Built product map {meta.to_dict()}")
    return F, meta
