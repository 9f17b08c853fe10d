"""
Named maps with verified metadata.

Every entry is rebuilt from exact coefficients and re-verified when it is
created; the registry itself is read-only.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from biharmonic.constructors.forms import (
    circle_harmonics,
    hopf_map,
    identity_map,
    stack,
)
from biharmonic.errors import InvalidArgument, UnknownName
from biharmonic.maps import PolyMap, SphereMapMeta, sphere_restriction_check
from biharmonic.polyalg import Polynomial, RadicalScalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    map: PolyMap
    meta: SphereMapMeta
    provenance: str

    def __post_init__(self) -> None:
        sphere_restriction_check(self.map, self.meta)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "components": self.map.to_strings(),
            "nvars": self.map.nvars,
            "meta": self.meta.to_dict(),
            "provenance": self.provenance,
        }


def _sqrt(n: int) -> RadicalScalar:
    return RadicalScalar.sqrt(n)


def _half(value) -> RadicalScalar:
    return RadicalScalar.coerce(value) * Fraction(1, 2)


def _quarter(value) -> RadicalScalar:
    return RadicalScalar.coerce(value) * Fraction(1, 4)


def veronese() -> PolyMap:
    x, y, z = (Polynomial.variable(i, 3) for i in range(3))
    return PolyMap(
        [
            (x * x + y * y - z * z * 2) * Fraction(1, 2),
            (x * x - y * y) * _half(_sqrt(3)),
            x * y * _sqrt(3),
            x * z * _sqrt(3),
            y * z * _sqrt(3),
        ]
    )


def cck_degree3() -> PolyMap:
    """Unit-radius cubic form S^2 -> S^6."""
    x, y, z = (Polynomial.variable(i, 3) for i in range(3))
    mixed = -(x * x) - y * y + z * z * 4
    return PolyMap(
        [
            z * (x * x * -3 - y * y * 3 + z * z * 2) * Fraction(1, 2),
            x * mixed * _quarter(_sqrt(6)),
            z * (x * x - y * y) * _half(_sqrt(15)),
            x * (x * x - y * y * 3) * _quarter(_sqrt(10)),
            y * mixed * _quarter(_sqrt(6)),
            x * y * z * _sqrt(15),
            y * (x * x * 3 - y * y) * _quarter(_sqrt(10)),
        ]
    )


def _four_variables() -> Tuple[Polynomial, ...]:
    return tuple(Polynomial.variable(i, 4) for i in range(4))


def quadratic_example_f1() -> PolyMap:
    """Non-harmonic quadratic form with |F|^2 = (3/4)|x|^4."""
    x1, x2, x3, x4 = _four_variables()
    radius = Polynomial.radius_squared(4)
    inverse_root_two = _half(_sqrt(2))
    cross = x1 * x4 + x2 * x3
    shift = radius * (inverse_root_two * Fraction(1, 2))
    return PolyMap(
        [
            (x1 * x1 + x2 * x2 - x3 * x3 - x4 * x4) * inverse_root_two,
            (x1 * x3 - x2 * x4) * _sqrt(2),
            cross - shift,
            cross + shift,
        ]
    )


def quartic_example_f2() -> PolyMap:
    """|x|^4 / 2 on R^4, a one-component form with r^2 = 1/4."""
    return PolyMap([Polynomial.radius_squared(4) ** 2 * Fraction(1, 2)])


def final_example_map() -> PolyMap:
    """The mixed example after an orthogonal change of target coordinates."""
    x1, x2, x3, x4 = _four_variables()
    inverse_root_two = _half(_sqrt(2))
    return PolyMap(
        [
            (x1 * x1 + x2 * x2 - x3 * x3 - x4 * x4) * inverse_root_two,
            (x1 * x3 - x2 * x4) * _sqrt(2),
            (x1 * x4 + x2 * x3) * _sqrt(2),
            Polynomial.radius_squared(4) * inverse_root_two,
            Polynomial.zero(4),
        ]
    )


def mixed_example() -> PolyMap:
    return stack(quadratic_example_f1(), quartic_example_f2())


# name -> (builder, provenance)
_REGISTRY: Dict[str, tuple] = {
    "veronese": (veronese, "Veronese map S^2 -> S^4, quadratic eigenmap"),
    "cck3": (cck_degree3, "cubic eigenmap S^2 -> S^6 with printed coefficients"),
    "quad-f1": (quadratic_example_f1, "non-harmonic quadratic form, |F|^2 = 3/4 |x|^4"),
    "quart-f2": (quartic_example_f2, "quartic one-component form |x|^4 / 2"),
    "final-map": (final_example_map, "mixed example rotated onto a small hypersphere"),
    "hopf": (hopf_map, "Hopf map S^3 -> S^2"),
    "mixed": (mixed_example, "quadratic f1 stacked over quartic f2, proper biharmonic"),
}

GALLERY: Mapping[str, tuple] = MappingProxyType(_REGISTRY)

ALIASES: Mapping[str, str] = MappingProxyType(
    {
        "cck_degree3": "cck3",
        "quadratic_example_f1": "quad-f1",
        "quartic_example_f2": "quart-f2",
        "final_example_map": "final-map",
    }
)

PARAMETRIC_NAMES = ("circle:<k>", "identity:<m>")


def _entry(name: str, F: PolyMap, provenance: str) -> GalleryEntry:
    return GalleryEntry(
        name=name, map=F, meta=sphere_restriction_check(F), provenance=provenance
    )


def _parametric(name: str) -> Optional[GalleryEntry]:
    prefix, sep, argument = name.partition(":")
    if not sep or prefix not in ("circle", "identity"):
        return None
    try:
        value = int(argument)
    except ValueError:
        raise InvalidArgument(f"'{name}' needs an integer after ':'") from None
    if prefix == "circle":
        return _entry(name, circle_harmonics(value), f"circle harmonic Re/Im z^{value}")
    return _entry(name, identity_map(value), f"identity of S^{value}")


@lru_cache(maxsize=None)
def named_form(name: str) -> GalleryEntry:
    """
    Look up a gallery map.

    Args:
        name: Registry name, alias, ``circle:<k>`` or ``identity:<m>``

    Returns:
        GalleryEntry with verified metadata

    Raises:
        UnknownName: for names outside the gallery
    """
    parametric = _parametric(name)
    if parametric is not None:
        return parametric
    canonical = ALIASES.get(name, name)
    if canonical not in GALLERY:
        raise UnknownName(
            f"No gallery map named '{name}'",
            [f"known: {', '.join(gallery_names())}"],
        )
    builder: Callable[[], PolyMap]
    builder, provenance = GALLERY[canonical]
    logger.debug(f"Building gallery map {canonical}")
    return _entry(canonical, builder(), provenance)


def gallery_names() -> List[str]:
    return list(GALLERY) + list(PARAMETRIC_NAMES)
