"""
Exact scalars of the form sum q_n * sqrt(n).

Every radicand n is a squarefree positive integer (n = 1 is the rational
part) and every q_n is a nonzero ``Fraction``. The set is a ring; inversion is
only offered for single-term scalars, which covers every division the field
engines perform (by r^2, r^4 and by single radicals such as 1/sqrt(2)).
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from sympy.ntheory.factor_ import core as power_free_part
from typing_extensions import Self

from biharmonic.errors import RadiusNotRepresentable, UnsupportedDivision

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
ScalarLike = Union[int, Fraction, "RadicalScalar"]


@lru_cache(maxsize=8192)
def squarefree_decomposition(n: int) -> Tuple[int, int]:
    """
    Split a positive integer as n = s^2 * d with d squarefree.

    Args:
        n: Positive integer

    Returns:
        Tuple (s, d)
    """
    if n <= 0:
        raise ValueError(f"Radicand must be positive, got {n}")
    d = int(power_free_part(n, 2))
    return math.isqrt(n // d), d


@lru_cache(maxsize=8192)
def radical_product(a: int, b: int) -> Tuple[int, int]:
    """sqrt(a) * sqrt(b) = s * sqrt(d) for squarefree a, b."""
    if a == 1:
        return 1, b
    if b == 1:
        return 1, a
    g = math.gcd(a, b)
    return g, (a // g) * (b // g)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class RadicalScalar:
    """Immutable element of the Q-span of square roots of squarefree integers."""

    __slots__ = ("_items", "_hash", "_float")

    _items: Tuple[Tuple[int, Fraction], ...]
    _hash: Optional[int]
    _float: Optional[float]

    def __init__(self, terms: Optional[Mapping[int, Rational]] = None):
        accumulated: Dict[int, Fraction] = {}
        for radicand, coefficient in (terms or {}).items():
            if not isinstance(radicand, int) or isinstance(radicand, bool):
                raise TypeError(f"Radicand must be an int, got {radicand!r}")
            q = Fraction(coefficient)
            if q == 0:
                continue
            s, d = squarefree_decomposition(radicand)
            accumulated[d] = accumulated.get(d, Fraction(0)) + q * s
        self._items = tuple(
            (d, q) for d, q in sorted(accumulated.items()) if q != 0
        )
        self._hash = None
        self._float = None

    @classmethod
    def _from_items(cls, items: Iterable[Tuple[int, Fraction]]) -> Self:
        # items must already be squarefree-keyed, nonzero and sorted
        scalar = object.__new__(cls)
        scalar._items = tuple(items)
        scalar._hash = None
        scalar._float = None
        return scalar

    @classmethod
    def from_accumulator(cls, accumulator: Mapping[int, Fraction]) -> Self:
        """Build from a radicand -> coefficient dict whose keys are squarefree."""
        return cls._from_items(
            (d, q) for d, q in sorted(accumulator.items()) if q != 0
        )

    @classmethod
    def zero(cls) -> Self:
        return cls._from_items(())

    @classmethod
    def one(cls) -> Self:
        return cls._from_items(((1, Fraction(1)),))

    @classmethod
    def rational(cls, value: Rational) -> Self:
        q = Fraction(value)
        if q == 0:
            return cls.zero()
        return cls._from_items(((1, q),))

    @classmethod
    def sqrt(cls, n: int) -> Self:
        """Exact square root of a non-negative integer."""
        if n < 0:
            raise RadiusNotRepresentable(
                f"sqrt({n}) is not real", [f"radicand: {n}"]
            )
        if n == 0:
            return cls.zero()
        s, d = squarefree_decomposition(n)
        return cls._from_items(((d, Fraction(s)),))

    @classmethod
    def coerce(cls, value: ScalarLike) -> "RadicalScalar":
        if isinstance(value, RadicalScalar):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls.rational(value)
        raise TypeError(f"Cannot use {type(value).__name__} as an exact scalar")

    # -- inspection -------------------------------------------------------

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._items)

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._items)

    def is_zero(self) -> bool:
        return not self._items

    def is_rational(self) -> bool:
        return not self._items or (len(self._items) == 1 and self._items[0][0] == 1)

    def is_single_term(self) -> bool:
        return len(self._items) == 1

    def as_rational(self) -> Fraction:
        if not self._items:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._items[0][1]

    def is_positive_rational(self) -> bool:
        return self.is_rational() and self.as_rational() > 0

    # -- ring operations --------------------------------------------------

    def __add__(self, other: ScalarLike) -> "RadicalScalar":
        try:
            rhs = RadicalScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not rhs._items:
            return self
        if not self._items:
            return rhs
        accumulator: Dict[int, Fraction] = dict(self._items)
        for d, q in rhs._items:
            accumulator[d] = accumulator.get(d, Fraction(0)) + q
        return RadicalScalar.from_accumulator(accumulator)

    def __radd__(self, other: ScalarLike) -> "RadicalScalar":
        return self + other

    def __neg__(self) -> "RadicalScalar":
        return RadicalScalar._from_items((d, -q) for d, q in self._items)

    def __sub__(self, other: ScalarLike) -> "RadicalScalar":
        try:
            rhs = RadicalScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: ScalarLike) -> "RadicalScalar":
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> "RadicalScalar":
        try:
            rhs = RadicalScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._items or not rhs._items:
            return RadicalScalar.zero()
        if len(rhs._items) == 1 and rhs._items[0][0] == 1:
            factor = rhs._items[0][1]
            return RadicalScalar._from_items((d, q * factor) for d, q in self._items)
        accumulator: Dict[int, Fraction] = {}
        for d1, q1 in self._items:
            for d2, q2 in rhs._items:
                s, d = radical_product(d1, d2)
                accumulator[d] = accumulator.get(d, Fraction(0)) + q1 * q2 * s
        return RadicalScalar.from_accumulator(accumulator)

    def __rmul__(self, other: ScalarLike) -> "RadicalScalar":
        return self * other

    def inverse(self) -> "RadicalScalar":
        """invert(q*sqrt(n)) = (1/(q*n)) * sqrt(n)."""
        if not self._items:
            raise UnsupportedDivision("Division by zero")
        if len(self._items) > 1:
            raise UnsupportedDivision(
                f"Cannot invert the multi-term radical {self}",
                ["only single-term scalars are invertible"],
            )
        d, q = self._items[0]
        return RadicalScalar._from_items(((d, 1 / (q * d)),))

    def __truediv__(self, other: ScalarLike) -> "RadicalScalar":
        try:
            rhs = RadicalScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: ScalarLike) -> "RadicalScalar":
        return RadicalScalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "RadicalScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = RadicalScalar.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison and conversion ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalScalar):
            return self._items == other._items
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._items == RadicalScalar.rational(other)._items
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.as_rational())
            else:
                self._hash = hash(self._items)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._items)

    def __float__(self) -> float:
        if self._float is None:
            self._float = float(
                sum(float(q) * math.sqrt(d) for d, q in self._items)
            )
        return self._float

    def __repr__(self) -> str:
        return f"RadicalScalar({self})"

    def __str__(self) -> str:
        if not self._items:
            return "0"
        pieces = []
        for index, (d, q) in enumerate(self._items):
            magnitude = abs(q)
            if d == 1:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = f"sqrt({d})"
            else:
                body = f"{format_rational(magnitude)}*sqrt({d})"
            if index == 0:
                pieces.append(f"-{body}" if q < 0 else body)
            else:
                pieces.append(f" - {body}" if q < 0 else f" + {body}")
        return "".join(pieces)

    def leading_sign(self) -> int:
        """Sign of the coefficient printed first (used when rendering polynomials)."""
        if not self._items:
            return 0
        return -1 if self._items[0][1] < 0 else 1


def sqrt_of_rational(value: ScalarLike) -> RadicalScalar:
    """
    Exact square root of a non-negative rational.

    sqrt(p/q) = sqrt(p*q)/q = (s/q)*sqrt(d) with p*q = s^2 * d.

    Raises:
        RadiusNotRepresentable: for irrational or negative input
    """
    scalar = RadicalScalar.coerce(value)
    if not scalar.is_rational():
        raise RadiusNotRepresentable(
            f"sqrt({scalar}) leaves the radical ring",
            ["squared radii must be rational"],
        )
    q = scalar.as_rational()
    if q < 0:
        raise RadiusNotRepresentable(f"sqrt({q}) is not real")
    if q == 0:
        return RadicalScalar.zero()
    s, d = squarefree_decomposition(q.numerator * q.denominator)
    return RadicalScalar._from_items(((d, Fraction(s, q.denominator)),))
