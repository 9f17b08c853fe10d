import logging
from typing import (
    Callable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
    overload,
)

import numpy as np

from biharmonic.errors import DimensionMismatch
from biharmonic.polyalg import Polynomial, RadicalScalar
from biharmonic.polyalg.radicals import ScalarLike

logger = logging.getLogger(__name__)


class PolyMap:
    """
    Ordered, non-empty sequence of polynomials sharing one variable count.

    Houses a form F, its restriction Phi (as ambient polynomials) and every
    tension/bitension output.
    """

    __slots__ = ("_nvars", "_components")

    def __init__(self, components: Sequence[Polynomial], nvars: Optional[int] = None):
        items: Tuple[Polynomial, ...] = tuple(components)
        if not items:
            raise DimensionMismatch("A map needs at least one component")
        expected = items[0].nvars if nvars is None else nvars
        for index, component in enumerate(items):
            if component.nvars != expected:
                raise DimensionMismatch(
                    f"Component {index} has {component.nvars} variables, "
                    f"expected {expected}"
                )
        self._nvars = expected
        self._components = items

    @classmethod
    def zero(cls, size: int, nvars: int) -> "PolyMap":
        return cls([Polynomial.zero(nvars)] * size, nvars)

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def components(self) -> Tuple[Polynomial, ...]:
        return self._components

    def __len__(self) -> int:
        return len(self._components)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self._components)

    @overload
    def __getitem__(self, index: int) -> Polynomial: ...

    @overload
    def __getitem__(self, index: slice) -> "PolyMap": ...

    def __getitem__(self, index: Union[int, slice]) -> Union[Polynomial, "PolyMap"]:
        if isinstance(index, slice):
            return PolyMap(self._components[index], self._nvars)
        return self._components[index]

    def _check_same_shape(self, other: "PolyMap") -> None:
        if len(other) != len(self) or other.nvars != self._nvars:
            raise DimensionMismatch(
                f"Maps of shape {len(self)}x{self._nvars} "
                f"and {len(other)}x{other.nvars}"
            )

    def map(self, function: Callable[[Polynomial], Polynomial]) -> "PolyMap":
        return PolyMap([function(c) for c in self._components])

    def __add__(self, other: "PolyMap") -> "PolyMap":
        self._check_same_shape(other)
        return PolyMap([a + b for a, b in zip(self._components, other._components)])

    def __sub__(self, other: "PolyMap") -> "PolyMap":
        self._check_same_shape(other)
        return PolyMap([a - b for a, b in zip(self._components, other._components)])

    def __neg__(self) -> "PolyMap":
        return self.map(lambda c: -c)

    def scale(self, factor: Union[ScalarLike, Polynomial]) -> "PolyMap":
        """Multiply every component by a scalar or by a scalar polynomial."""
        return self.map(lambda c: c * factor)

    def dot(self, other: "PolyMap") -> Polynomial:
        self._check_same_shape(other)
        total = Polynomial.zero(self._nvars)
        for a, b in zip(self._components, other._components):
            total = total + a * b
        return total

    def norm_squared(self) -> Polynomial:
        return self.dot(self)

    def concat(self, other: "PolyMap") -> "PolyMap":
        if other.nvars != self._nvars:
            raise DimensionMismatch(
                f"Cannot stack maps in {self._nvars} and {other.nvars} variables"
            )
        return PolyMap(self._components + other._components, self._nvars)

    def blockwise(self, split: int, first: ScalarLike, second: ScalarLike) -> "PolyMap":
        """Scale components before ``split`` by ``first`` and the rest by ``second``."""
        if not 0 < split < len(self):
            raise DimensionMismatch(f"Split {split} outside 1..{len(self) - 1}")
        return PolyMap(
            [c * first for c in self._components[:split]]
            + [c * second for c in self._components[split:]],
            self._nvars,
        )

    def embed(self, nvars: int, offset: int = 0) -> "PolyMap":
        return PolyMap([c.embed(nvars, offset) for c in self._components], nvars)

    def permute(self, order: Sequence[int]) -> "PolyMap":
        if sorted(order) != list(range(len(self))):
            raise DimensionMismatch(
                f"{list(order)} is not a permutation of the components"
            )
        return PolyMap([self._components[i] for i in order], self._nvars)

    def normal_form(self, blocks: Optional[Sequence[int]] = None) -> "PolyMap":
        return self.map(lambda c: c.normal_form(blocks))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._components)

    def degree(self) -> int:
        return max(c.degree() for c in self._components)

    def evaluate(self, point: Sequence) -> List:
        return [c.evaluate(point) for c in self._components]

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """(count, components) array of float values."""
        return np.stack([c.evaluate_many(points) for c in self._components], axis=1)

    def to_strings(self) -> List[str]:
        return [str(c) for c in self._components]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self._nvars == other._nvars and self._components == other._components

    def __hash__(self) -> int:
        return hash((self._nvars, self._components))

    def __repr__(self) -> str:
        return f"PolyMap({self._nvars}, [{', '.join(self.to_strings())}])"


def constant_map(values: Sequence[ScalarLike], nvars: int) -> PolyMap:
    return PolyMap(
        [Polynomial.constant(RadicalScalar.coerce(v), nvars) for v in values]
    )
