"""Verified sphere-map metadata: kind, degrees, squared radii, dimensions."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple

from biharmonic.polyalg import RadicalScalar


class MapKind(Enum):
    """The three restriction patterns a form can follow."""

    HOMOGENEOUS = "homogeneous"
    DIAGONAL = "diagonal"
    PRODUCT = "product"


@dataclass(frozen=True)
class SphereMapMeta:
    """Common interface of the three metadata kinds."""

    @property
    def kind(self) -> MapKind:
        raise NotImplementedError

    @property
    def blocks(self) -> Tuple[int, ...]:
        """Sizes of the domain variable blocks, one per sphere factor."""
        raise NotImplementedError

    @property
    def nvars(self) -> int:
        return sum(self.blocks)

    @property
    def block_dimensions(self) -> Tuple[int, ...]:
        return tuple(size - 1 for size in self.blocks)

    @property
    def target_radius_sq(self) -> RadicalScalar:
        return RadicalScalar.one()

    @property
    def degrees(self) -> Tuple[int, ...]:
        raise NotImplementedError

    @property
    def radii_sq(self) -> Tuple[RadicalScalar, ...]:
        raise NotImplementedError

    def to_dict(self) -> Dict[str, Any]:
        raise NotImplementedError


@dataclass(frozen=True)
class HomogeneousMeta(SphereMapMeta):
    """Form of degree k with |F|^2 = r^2 |x|^(2k) on R^(m+1)."""

    m: int
    k: int
    r_sq: RadicalScalar

    @property
    def kind(self) -> MapKind:
        return MapKind.HOMOGENEOUS

    @property
    def blocks(self) -> Tuple[int, ...]:
        return (self.m + 1,)

    @property
    def target_radius_sq(self) -> RadicalScalar:
        return self.r_sq

    @property
    def degrees(self) -> Tuple[int, ...]:
        return (self.k,)

    @property
    def radii_sq(self) -> Tuple[RadicalScalar, ...]:
        return (self.r_sq,)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "m": self.m,
            "k": self.k,
            "r_sq": str(self.r_sq),
        }


@dataclass(frozen=True)
class DiagonalMeta(SphereMapMeta):
    """(F1, F2) on one domain sphere, F1 = components before ``split``."""

    m: int
    k1: int
    k2: int
    r1_sq: RadicalScalar
    r2_sq: RadicalScalar
    split: int

    @property
    def kind(self) -> MapKind:
        return MapKind.DIAGONAL

    @property
    def blocks(self) -> Tuple[int, ...]:
        return (self.m + 1,)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return (self.k1, self.k2)

    @property
    def radii_sq(self) -> Tuple[RadicalScalar, ...]:
        return (self.r1_sq, self.r2_sq)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "m": self.m,
            "k1": self.k1,
            "k2": self.k2,
            "r1_sq": str(self.r1_sq),
            "r2_sq": str(self.r2_sq),
            "split": self.split,
        }


@dataclass(frozen=True)
class ProductMeta(SphereMapMeta):
    """(F1(x_a), F2(x_b)) on S^m1 x S^m2 with disjoint variable blocks."""

    m1: int
    m2: int
    k1: int
    k2: int
    r1_sq: RadicalScalar
    r2_sq: RadicalScalar
    split: int

    @property
    def kind(self) -> MapKind:
        return MapKind.PRODUCT

    @property
    def blocks(self) -> Tuple[int, ...]:
        return (self.m1 + 1, self.m2 + 1)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return (self.k1, self.k2)

    @property
    def radii_sq(self) -> Tuple[RadicalScalar, ...]:
        return (self.r1_sq, self.r2_sq)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "m1": self.m1,
            "m2": self.m2,
            "k1": self.k1,
            "k2": self.k2,
            "r1_sq": str(self.r1_sq),
            "r2_sq": str(self.r2_sq),
            "split": self.split,
        }
