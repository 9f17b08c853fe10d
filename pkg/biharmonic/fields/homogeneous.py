"""Closed-form tension and bitension of a homogeneous form F on S^m."""

import logging
from collections import OrderedDict
from typing import Dict

from biharmonic.errors import WrongKind
from biharmonic.maps import (
    HomogeneousMeta,
    PolyMap,
    SphereMapMeta,
    euclidean_laplacian,
    grad_norm_squared,
    hessian_norm_squared,
    push_gradient,
)
from biharmonic.polyalg import Polynomial

logger = logging.getLogger(__name__)


def _require_homogeneous(meta: SphereMapMeta) -> HomogeneousMeta:
    if not isinstance(meta, HomogeneousMeta):
        raise WrongKind(
            f"Homogeneous closed forms need homogeneous metadata, got {meta.kind.value}"
        )
    return meta


def tension_homogeneous(F: PolyMap, meta: SphereMapMeta) -> PolyMap:
    """
    tau(phi) = NF(-lap F + ((1/r^2)|dF|^2 - k(m + 2k - 1)) F).

    Args:
        F: Homogeneous form
        meta: Its verified HomogeneousMeta

    Returns:
        Tension field as an NF map
    """
    meta = _require_homogeneous(meta)
    m, k = meta.m, meta.k
    inverse = meta.r_sq.inverse()
    coefficient = grad_norm_squared(F) * inverse - k * (m + 2 * k - 1)
    tension = euclidean_laplacian(F).scale(-1) + F.scale(coefficient)
    return tension.normal_form(meta.blocks)


def bitension_homogeneous_terms(F: PolyMap, meta: SphereMapMeta) -> Dict[str, PolyMap]:
    """
    The bitension of a homogeneous form split into its named summands.

    Every summand is a vector field along F before reduction; their NF sum is
    the bitension. The names are stable and are what ``--human`` prints.
    """
    meta = _require_homogeneous(meta)
    m, k = meta.m, meta.k
    inverse = meta.r_sq.inverse()
    n = F.nvars

    lap_F = euclidean_laplacian(F)
    energy = grad_norm_squared(F)
    scalar = Polynomial.constant

    terms: Dict[str, PolyMap] = OrderedDict()
    terms["laplacian_squared"] = euclidean_laplacian(lap_F)
    terms["laplacian"] = lap_F.scale(
        (scalar(m * k + 2 * k * k - 3 * k - m + 3, n) - energy * inverse) * 2
    )
    terms["energy_laplacian"] = F.scale(euclidean_laplacian(energy) * (inverse * -2))
    terms["hessian"] = F.scale(hessian_norm_squared(F) * (inverse * -2))
    terms["laplacian_norm"] = F.scale(lap_F.norm_squared() * inverse)
    terms["energy_linear"] = F.scale(
        energy * (inverse * (-2 * (2 * m * k + 6 * k * k - 6 * k - m + 3)))
    )
    terms["energy_quadratic"] = F.scale(energy * energy * (inverse * inverse * 2))
    terms["constant"] = F.scale(4 * k * k * (m + 2 * k - 1))
    terms["push_gradient"] = push_gradient(F, energy).scale(inverse * 2)
    return terms


def bitension_homogeneous(F: PolyMap, meta: SphereMapMeta) -> PolyMap:
    terms = bitension_homogeneous_terms(F, meta)
    total = PolyMap.zero(len(F), F.nvars)
    for term in terms.values():
        total = total + term
    return total.normal_form(meta.blocks)
