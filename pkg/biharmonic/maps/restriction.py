import logging
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from biharmonic.errors import NotASphereMap, RadiiDoNotSumToOne
from biharmonic.maps.meta import (
    DiagonalMeta,
    HomogeneousMeta,
    MapKind,
    ProductMeta,
    SphereMapMeta,
)
from biharmonic.maps.polymap import PolyMap
from biharmonic.polyalg import Polynomial, RadicalScalar

logger = logging.getLogger(__name__)

Expectation = Union[None, MapKind, SphereMapMeta]


def form_signature(
    components: Sequence[Polynomial], variables: Optional[Sequence[int]] = None
) -> Optional[Tuple[int, RadicalScalar]]:
    """
    (k, c) when the components form a degree-k form with |F|^2 = c * |x|^(2k).

    ``variables`` restricts both the dependence and the radius polynomial to a
    block. Zero components are allowed; c must be a nonzero single-term scalar
    so that it can be divided by.
    """
    nonzero = [c for c in components if not c.is_zero()]
    if not nonzero:
        return None
    degrees = {c.homogeneous_degree() for c in nonzero}
    if len(degrees) != 1 or None in degrees:
        return None
    k = degrees.pop()
    if k is None or k < 1:
        return None
    if variables is not None and not all(c.depends_only_on(variables) for c in nonzero):
        return None
    quotient: Optional[Polynomial] = PolyMap(nonzero).norm_squared()
    for _ in range(k):
        assert quotient is not None
        quotient = quotient.divide_by_radius_squared(variables)
        if quotient is None:
            return None
    assert quotient is not None
    if not quotient.is_constant():
        return None
    c = quotient.constant_value()
    if not c.is_single_term():
        return None
    return k, c


def _homogeneous(F: PolyMap) -> Optional[HomogeneousMeta]:
    if F.nvars < 2:
        return None
    signature = form_signature(F.components)
    if signature is None:
        return None
    k, r_sq = signature
    return HomogeneousMeta(m=F.nvars - 1, k=k, r_sq=r_sq)


def _diagonal_at(F: PolyMap, split: int) -> Optional[DiagonalMeta]:
    first = form_signature(F.components[:split])
    second = form_signature(F.components[split:])
    if first is None or second is None:
        return None
    (k1, r1_sq), (k2, r2_sq) = first, second
    if r1_sq + r2_sq != 1:
        raise RadiiDoNotSumToOne(
            f"Squared radii {r1_sq} and {r2_sq} do not sum to 1",
            [f"split: {split}", f"degrees: {k1}, {k2}"],
        )
    if not (F.norm_squared() - 1).normal_form().is_zero():
        raise NotASphereMap(f"|F|^2 - 1 is not in the sphere ideal at split {split}")
    return DiagonalMeta(
        m=F.nvars - 1, k1=k1, k2=k2, r1_sq=r1_sq, r2_sq=r2_sq, split=split
    )


def _product_at(F: PolyMap, split: int, first_block: int) -> Optional[ProductMeta]:
    first_vars = range(first_block)
    second_vars = range(first_block, F.nvars)
    first = form_signature(F.components[:split], first_vars)
    second = form_signature(F.components[split:], second_vars)
    if first is None or second is None:
        return None
    (k1, r1_sq), (k2, r2_sq) = first, second
    if r1_sq + r2_sq != 1:
        raise RadiiDoNotSumToOne(
            f"Squared radii {r1_sq} and {r2_sq} do not sum to 1",
            [f"split: {split}", f"first block: {first_block} variables"],
        )
    return ProductMeta(
        m1=first_block - 1,
        m2=F.nvars - first_block - 1,
        k1=k1,
        k2=k2,
        r1_sq=r1_sq,
        r2_sq=r2_sq,
        split=split,
    )


def _scan(
    candidates: Iterable[Tuple[int, ...]],
    builder: Callable[..., Optional[SphereMapMeta]],
) -> Optional[SphereMapMeta]:
    radius_errors: List[RadiiDoNotSumToOne] = []
    for args in candidates:
        try:
            meta = builder(*args)
        except RadiiDoNotSumToOne as error:
            radius_errors.append(error)
            continue
        if meta is not None:
            return meta
    if radius_errors:
        raise radius_errors[0]
    return None


def _diagonal(F: PolyMap) -> Optional[DiagonalMeta]:
    if F.nvars < 2 or len(F) < 2:
        return None
    return _scan(((s,) for s in range(1, len(F))), lambda s: _diagonal_at(F, s))


def _product(F: PolyMap) -> Optional[ProductMeta]:
    if F.nvars < 4 or len(F) < 2:
        return None
    candidates = (
        (s, b) for b in range(2, F.nvars - 1) for s in range(1, len(F))
    )
    return _scan(candidates, lambda s, b: _product_at(F, s, b))


def _reverify(F: PolyMap, expected: SphereMapMeta) -> SphereMapMeta:
    found: Optional[SphereMapMeta]
    if isinstance(expected, HomogeneousMeta):
        found = _homogeneous(F)
    elif isinstance(expected, DiagonalMeta):
        found = _diagonal_at(F, expected.split) if 0 < expected.split < len(F) else None
    elif isinstance(expected, ProductMeta):
        found = (
            _product_at(F, expected.split, expected.m1 + 1)
            if 0 < expected.split < len(F) and expected.m1 + expected.m2 + 2 == F.nvars
            else None
        )
    else:
        found = None
    if found != expected:
        raise NotASphereMap(
            "Map does not satisfy its declared restriction identities",
            [f"declared: {expected.to_dict()}", f"found: {found}"],
        )
    return found


def sphere_restriction_check(F: PolyMap, expected: Expectation = None) -> SphereMapMeta:
    """
    Verify the exact polynomial identities that make F restrict to a sphere map.

    Args:
        F: Candidate form
        expected: None to infer (Homogeneous, then Diagonal, then Product),
            a MapKind to test only that pattern, or metadata to re-verify

    Returns:
        Verified metadata

    Raises:
        NotASphereMap: when no identity pattern matches
        RadiiDoNotSumToOne: when a split pattern matches but r1^2 + r2^2 != 1
    """
    if isinstance(expected, SphereMapMeta):
        meta = _reverify(F, expected)
        logger.debug(f"Re-verified {meta.kind.value} metadata")
        return meta

    attempts = {
        MapKind.HOMOGENEOUS: _homogeneous,
        MapKind.DIAGONAL: _diagonal,
        MapKind.PRODUCT: _product,
    }
    kinds = list(attempts) if expected is None else [expected]
    for kind in kinds:
        meta = attempts[kind](F)
        if meta is not None:
            logger.debug(f"Map restricts as {kind.value}: {meta.to_dict()}")
            return meta

    norm = F.norm_squared()
    raise NotASphereMap(
        "No sphere-restriction pattern matches",
        [f"|F|^2 = {norm}", f"tried: {', '.join(k.value for k in kinds)}"],
    )
