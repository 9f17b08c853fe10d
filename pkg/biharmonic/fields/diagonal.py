"""Closed-form tension and bitension of a diagonal map (F1, F2) on S^m."""

import logging
from collections import OrderedDict
from typing import Dict, Tuple

from biharmonic.errors import WrongKind
from biharmonic.maps import (
    DiagonalMeta,
    PolyMap,
    SphereMapMeta,
    euclidean_laplacian,
    grad_norm_squared,
    hessian_norm_squared,
    push_gradient,
)
from biharmonic.polyalg import Polynomial

logger = logging.getLogger(__name__)


def _require_diagonal(meta: SphereMapMeta) -> DiagonalMeta:
    if not isinstance(meta, DiagonalMeta):
        raise WrongKind(
            f"Diagonal closed forms need diagonal metadata, got {meta.kind.value}"
        )
    return meta


def _halves(F: PolyMap, meta: DiagonalMeta) -> Tuple[PolyMap, PolyMap]:
    return F[: meta.split], F[meta.split :]


def _shifted_energy(F: PolyMap, meta: DiagonalMeta) -> Polynomial:
    """E = |dF|^2 - k1^2 r1^2 - k2^2 r2^2."""
    radial = meta.r1_sq * (meta.k1 * meta.k1) + meta.r2_sq * (meta.k2 * meta.k2)
    return grad_norm_squared(F) - radial


def tension_diagonal(F: PolyMap, meta: SphereMapMeta) -> PolyMap:
    """
    tau(phi) = NF(-lap F + ((E + k1(1 - m - k1)) F1, (E + k2(1 - m - k2)) F2)).

    Args:
        F: Diagonal map
        meta: Its verified DiagonalMeta

    Returns:
        Tension field as an NF map
    """
    meta = _require_diagonal(meta)
    m = meta.m
    energy = _shifted_energy(F, meta)
    first, second = _halves(F, meta)
    scaled = first.scale(energy + meta.k1 * (1 - m - meta.k1)).concat(
        second.scale(energy + meta.k2 * (1 - m - meta.k2))
    )
    return (euclidean_laplacian(F).scale(-1) + scaled).normal_form(meta.blocks)


def _per_block(
    first: PolyMap, second: PolyMap, coefficients: Tuple[object, object]
) -> PolyMap:
    return first.scale(coefficients[0]).concat(second.scale(coefficients[1]))


def bitension_diagonal_terms(F: PolyMap, meta: SphereMapMeta) -> Dict[str, PolyMap]:
    """
    The bitension of a diagonal map split into named summands.

    The squared-radius constant in the Phi coefficient carries -12 k_i.
    """
    meta = _require_diagonal(meta)
    m, k1, k2 = meta.m, meta.k1, meta.k2
    n = F.nvars
    first, second = _halves(F, meta)
    lap_F = euclidean_laplacian(F)
    lap_first, lap_second = _halves(lap_F, meta)
    energy = grad_norm_squared(F)
    shifted = _shifted_energy(F, meta)
    first_energy = grad_norm_squared(first)
    second_energy = grad_norm_squared(second)

    def constant(k: int, r_sq) -> Polynomial:
        value = r_sq * (-k * k * (m * m + 4 * m * k - 6 * m + 5 * k * k - 12 * k + 5))
        return Polynomial.constant(value, n)

    terms: Dict[str, PolyMap] = OrderedDict()
    terms["laplacian_squared"] = euclidean_laplacian(lap_F)
    terms["block_laplacian"] = _per_block(
        lap_first,
        lap_second,
        (
            2 * (m * k1 + k1 * k1 - 3 * k1 - m + 3),
            2 * (m * k2 + k2 * k2 - 3 * k2 - m + 3),
        ),
    )
    terms["block_eigenvalue"] = _per_block(
        first,
        second,
        (k1 * k1 * (m + k1 - 1) ** 2, k2 * k2 * (m + k2 - 1) ** 2),
    )
    terms["energy_tension"] = (
        lap_F.scale(-1)
        + _per_block(first, second, (k1 * (1 - m - k1), k2 * (1 - m - k2)))
    ).scale(shifted * 2)

    phi_coefficient = (
        euclidean_laplacian(energy) * -2
        - hessian_norm_squared(F) * 2
        + lap_F.norm_squared()
        + first_energy * (2 * (m + 2 * k1 - 3))
        + second_energy * (2 * (m + 2 * k2 - 3))
        + constant(k1, meta.r1_sq)
        + constant(k2, meta.r2_sq)
        - first_energy * (2 * k1 * (m + k1 - 1))
        - second_energy * (2 * k2 * (m + k2 - 1))
        + shifted * shifted * 2
    )
    terms["phi"] = F.scale(phi_coefficient)
    terms["push_gradient"] = push_gradient(F, energy).scale(2)
    terms["radial_correction"] = _per_block(first, second, (k1, k2)).scale(
        (first_energy * (k1 - 1) + second_energy * (k2 - 1)) * -4
    )
    return terms


def bitension_diagonal(F: PolyMap, meta: SphereMapMeta) -> PolyMap:
    terms = bitension_diagonal_terms(F, meta)
    total = PolyMap.zero(len(F), F.nvars)
    for term in terms.values():
        total = total + term
    return total.normal_form(meta.blocks)
