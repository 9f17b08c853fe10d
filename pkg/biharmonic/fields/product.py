"""
Closed forms for product maps (F1(x_a), F2(x_b)) on S^m1 x S^m2 with harmonic factors.

With nu_i = k_i (m_i + k_i - 1) and delta = nu_1 - nu_2:

    tau  = delta ((r1^2 - 1) Phi_1, r1^2 Phi_2)
    tau2 = (2 r1^2 - 1) delta tau
"""

import logging
from typing import List

from biharmonic.errors import FactorsNotHarmonic, WrongKind
from biharmonic.maps import PolyMap, ProductMeta, SphereMapMeta, euclidean_laplacian
from biharmonic.polyalg import RadicalScalar

logger = logging.getLogger(__name__)


def _require_harmonic_product(F: PolyMap, meta: SphereMapMeta) -> ProductMeta:
    if not isinstance(meta, ProductMeta):
        raise WrongKind(
            f"Product closed forms need product metadata, got {meta.kind.value}"
        )
    lap = euclidean_laplacian(F)
    failing: List[str] = []
    if not lap[: meta.split].is_zero():
        failing.append("first factor")
    if not lap[meta.split :].is_zero():
        failing.append("second factor")
    if failing:
        raise FactorsNotHarmonic(
            "Product closed forms assume harmonic factors",
            [f"lap F != 0 on the {name}" for name in failing],
        )
    return meta


def eigenvalue_gap(meta: ProductMeta) -> int:
    """delta = k1(m1 + k1 - 1) - k2(m2 + k2 - 1)."""
    return meta.k1 * (meta.m1 + meta.k1 - 1) - meta.k2 * (meta.m2 + meta.k2 - 1)


def tension_product(F: PolyMap, meta: SphereMapMeta) -> PolyMap:
    meta = _require_harmonic_product(F, meta)
    delta = eigenvalue_gap(meta)
    tension = F.blockwise(meta.split, (meta.r1_sq - 1) * delta, meta.r1_sq * delta)
    return tension.normal_form(meta.blocks)


def bitension_product(F: PolyMap, meta: SphereMapMeta) -> PolyMap:
    """(2 r1^2 - 1) delta tau; zero exactly when r1^2 = 1/2 or delta = 0."""
    tension = tension_product(F, meta)
    assert isinstance(meta, ProductMeta)
    factor: RadicalScalar = (meta.r1_sq * 2 - 1) * eigenvalue_gap(meta)
    return tension.scale(factor).normal_form(meta.blocks)
