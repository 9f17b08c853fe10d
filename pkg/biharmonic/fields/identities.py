"""Closed-form identities for forms, checked symbolically against direct computation."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

from biharmonic.errors import (
    DimensionMismatch,
    InvalidArgument,
    NotHarmonicForm,
    WrongKind,
    ZeroMap,
)
from biharmonic.fields.homogeneous import tension_homogeneous
from biharmonic.maps import (
    DiagonalMeta,
    HomogeneousMeta,
    PolyMap,
    SphereMapMeta,
    energy_density,
    euclidean_laplacian,
    grad_norm_squared,
    hessian_norm_squared,
)
from biharmonic.polyalg import Polynomial, RadicalScalar
from biharmonic.polyalg.radicals import ScalarLike

logger = logging.getLogger(__name__)


def _require_homogeneous(
    meta: SphereMapMeta, degree: Optional[int] = None
) -> HomogeneousMeta:
    if not isinstance(meta, HomogeneousMeta):
        raise WrongKind(f"Needs homogeneous metadata, got {meta.kind.value}")
    if degree is not None and meta.k != degree:
        raise WrongKind(f"Needs a form of degree {degree}, got degree {meta.k}")
    return meta


def combined_second_order(F: PolyMap, blocks: Sequence[int]) -> Polynomial:
    """NF(-2 lap|dF|^2 - 2 |Hess F|^2 + |lap F|^2)."""
    energy = grad_norm_squared(F)
    combined = (
        euclidean_laplacian(energy) * -2
        - hessian_norm_squared(F) * 2
        + euclidean_laplacian(F).norm_squared()
    )
    return combined.normal_form(blocks)


def quadratic_identity_check(
    F: PolyMap, meta: SphereMapMeta
) -> Tuple[Polynomial, RadicalScalar]:
    """
    Both sides of the quadratic-form identity.

    Returns:
        (NF of -2 lap|dF|^2 - 2|Hess F|^2 + |lap F|^2, 4 r^2 (m + 1)(m + 3));
        for a quadratic form the first is the constant polynomial of the second
    """
    meta = _require_homogeneous(meta, degree=2)
    expected = meta.r_sq * (4 * (meta.m + 1) * (meta.m + 3))
    return combined_second_order(F, meta.blocks), expected


@dataclass(frozen=True)
class PrintedVariant:
    """A value as printed in the literature and whether the computation matches it."""

    label: str
    value: RadicalScalar
    matches: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"label": self.label, "value": str(self.value), "matches": self.matches}


@dataclass(frozen=True)
class HarmonicIdentityReport:
    energy_laplacian: Polynomial
    energy_laplacian_expected: RadicalScalar
    hessian_norm: Polynomial
    hessian_norm_expected: RadicalScalar
    combined: Polynomial
    printed_variants: Tuple[PrintedVariant, ...] = field(default_factory=tuple)

    @property
    def energy_laplacian_holds(self) -> bool:
        return self.energy_laplacian == self.energy_laplacian_expected

    @property
    def hessian_norm_holds(self) -> bool:
        return self.hessian_norm == self.hessian_norm_expected

    @property
    def holds(self) -> bool:
        return self.energy_laplacian_holds and self.hessian_norm_holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "energy_laplacian": str(self.energy_laplacian),
            "energy_laplacian_expected": str(self.energy_laplacian_expected),
            "hessian_norm": str(self.hessian_norm),
            "hessian_norm_expected": str(self.hessian_norm_expected),
            "combined": str(self.combined),
            "holds": self.holds,
            "printed_variants": [v.to_dict() for v in self.printed_variants],
        }


def harmonic_identities_check(
    F: PolyMap, meta: SphereMapMeta
) -> HarmonicIdentityReport:
    """
    Check lap|dF|^2 and |Hess F|^2 of a harmonic form against their closed forms.

    On the sphere these are -2r^2 k(k-1)(m+2k-1)(m+2k-3) and
    r^2 k(k-1)(m^2 - 4m + 3 + 4k(m-2) + 4k^2). On circles the report also says
    whether the alternative values -8r^2k^2(k-1) and 8r^2k^2(2k-1) match.

    Raises:
        WrongKind: when meta is not homogeneous
        NotHarmonicForm: when lap F != 0
    """
    meta = _require_homogeneous(meta)
    if not euclidean_laplacian(F).is_zero():
        raise NotHarmonicForm("lap F is not zero", [f"form of degree {meta.k}"])
    m, k, r_sq = meta.m, meta.k, meta.r_sq
    energy_laplacian = euclidean_laplacian(grad_norm_squared(F))
    energy_laplacian = energy_laplacian.normal_form(meta.blocks)
    hessian_norm = hessian_norm_squared(F).normal_form(meta.blocks)
    energy_expected = r_sq * (-2 * k * (k - 1) * (m + 2 * k - 1) * (m + 2 * k - 3))
    hessian_factor = m * m - 4 * m + 3 + 4 * k * (m - 2) + 4 * k * k
    hessian_expected = r_sq * (k * (k - 1) * hessian_factor)

    variants: Tuple[PrintedVariant, ...] = ()
    if m == 1:
        printed_energy = r_sq * (-8 * k * k * (k - 1))
        printed_hessian = r_sq * (8 * k * k * (2 * k - 1))
        variants = (
            PrintedVariant(
                "circle energy laplacian",
                printed_energy,
                energy_laplacian == printed_energy,
            ),
            PrintedVariant(
                "circle hessian norm", printed_hessian, hessian_norm == printed_hessian
            ),
        )

    return HarmonicIdentityReport(
        energy_laplacian=energy_laplacian,
        energy_laplacian_expected=energy_expected,
        hessian_norm=hessian_norm,
        hessian_norm_expected=hessian_expected,
        combined=combined_second_order(F, meta.blocks),
        printed_variants=variants,
    )


def minimality_check(F: PolyMap) -> Tuple[PolyMap, int]:
    """
    Strip common factors |x|^2 from every component.

    Returns:
        The minimal representative of the restriction class and the number of strips

    Raises:
        ZeroMap: when every component is zero
    """
    if F.is_zero():
        raise ZeroMap("The zero map has no minimal representative")
    current = F
    strips = 0
    while True:
        quotients = [c.divide_by_radius_squared() for c in current]
        if any(q is None for q in quotients):
            break
        current = PolyMap([q for q in quotients if q is not None], F.nvars)
        strips += 1
    logger.debug(f"Stripped |x|^2 {strips} time(s)")
    return current, strips


@dataclass(frozen=True)
class SliceReport:
    """Whether <Phi, c> is constant on the domain, and the slice it cuts."""

    on_slice: bool
    constant: Optional[RadicalScalar]
    slice_radius_sq: Optional[RadicalScalar]

    def __bool__(self) -> bool:
        return self.on_slice

    def to_dict(self) -> Dict[str, Any]:
        return {
            "on_slice": self.on_slice,
            "constant": None if self.constant is None else str(self.constant),
            "slice_radius_sq": (
                None if self.slice_radius_sq is None else str(self.slice_radius_sq)
            ),
        }


def small_hypersphere_check(
    F: PolyMap, c: Sequence[ScalarLike], meta: Optional[SphereMapMeta] = None
) -> SliceReport:
    """
    Test whether the image lies in the hyperplane slice orthogonal to the unit vector c.

    Args:
        F: Map restricting to the sphere given by ``meta`` (single sphere if omitted)
        c: Unit vector with exact entries, one per component
        meta: Optional verified metadata giving the domain blocks and target radius

    Returns:
        SliceReport; slice_radius_sq is R^2 - constant^2 when R^2 is known
    """
    direction = [RadicalScalar.coerce(value) for value in c]
    if len(direction) != len(F):
        raise DimensionMismatch(
            f"Direction has {len(direction)} entries, map has {len(F)} components"
        )
    norm_sq = sum((a * a for a in direction), RadicalScalar.zero())
    if norm_sq != 1:
        raise InvalidArgument(f"Direction is not a unit vector: |c|^2 = {norm_sq}")

    blocks = meta.blocks if meta is not None else (F.nvars,)
    projection = Polynomial.zero(F.nvars)
    for a, component in zip(direction, F):
        if a:
            projection = projection + component * a
    projection = projection.normal_form(blocks)
    if not projection.is_constant():
        return SliceReport(on_slice=False, constant=None, slice_radius_sq=None)

    constant = projection.constant_value()
    target: Optional[RadicalScalar] = None
    if meta is not None:
        target = meta.target_radius_sq
    else:
        norm = F.norm_squared().normal_form(blocks)
        if norm.is_constant():
            target = norm.constant_value()
    slice_radius_sq = None if target is None else target - constant * constant
    return SliceReport(
        on_slice=True, constant=constant, slice_radius_sq=slice_radius_sq
    )


@dataclass(frozen=True)
class TripleEquivalence:
    tension_zero: bool
    laplacian_zero: bool
    energy_is_m_plus_one: bool

    @property
    def consistent(self) -> bool:
        return self.tension_zero == self.laplacian_zero == self.energy_is_m_plus_one


def quadratic_triple_equivalence(F: PolyMap, meta: SphereMapMeta) -> TripleEquivalence:
    """
    Evaluate tau = 0, lap F = 0 and e = m + 1 independently.

    Only defined for quadratic forms into the unit sphere.
    """
    meta = _require_homogeneous(meta, degree=2)
    if meta.r_sq != 1:
        raise WrongKind(
            f"Needs a quadratic form into the unit sphere, got r^2 = {meta.r_sq}"
        )
    return TripleEquivalence(
        tension_zero=tension_homogeneous(F, meta).is_zero(),
        laplacian_zero=euclidean_laplacian(F).is_zero(),
        energy_is_m_plus_one=energy_density(F, meta) == meta.m + 1,
    )


@dataclass(frozen=True)
class CriterionReport:
    first: Polynomial
    second: Polynomial

    @property
    def holds(self) -> bool:
        return self.first == self.second


def diagonal_harmonicity_criterion(F: PolyMap, meta: SphereMapMeta) -> CriterionReport:
    """NF(|d phi_1|^2 / r1^2) against NF(|d phi_2|^2 / r2^2)."""
    if not isinstance(meta, DiagonalMeta):
        raise WrongKind(f"Needs diagonal metadata, got {meta.kind.value}")
    sides = []
    for part, k, r_sq in (
        (F[: meta.split], meta.k1, meta.r1_sq),
        (F[meta.split :], meta.k2, meta.r2_sq),
    ):
        energy = grad_norm_squared(part) - r_sq * (k * k)
        sides.append((energy * r_sq.inverse()).normal_form(meta.blocks))
    return CriterionReport(first=sides[0], second=sides[1])
