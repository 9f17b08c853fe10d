"""
Sparse multivariate polynomials over RadicalScalar.

A Polynomial maps monomials (exponent tuples, one entry per variable) to
nonzero RadicalScalar coefficients. Instances are immutable, terms are kept in
canonical form, and iteration/printing follow lexicographic order with x1
highest so that output is reproducible.
"""

import logging
from fractions import Fraction
from types import MappingProxyType
from typing import (
    Dict,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np
from typing_extensions import Self

from biharmonic.errors import DimensionMismatch
from biharmonic.polyalg.radicals import (
    RadicalScalar,
    ScalarLike,
    radical_product,
)

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
PointValue = Union[int, Fraction, float, RadicalScalar]


def monomial_degree(monomial: Monomial) -> int:
    return sum(monomial)


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _block_ranges(nvars: int, blocks: Optional[Sequence[int]]) -> List[range]:
    if blocks is None:
        return [range(nvars)]
    if sum(blocks) != nvars or any(size < 1 for size in blocks):
        raise DimensionMismatch(
            f"Blocks {tuple(blocks)} do not partition {nvars} variables"
        )
    ranges = []
    start = 0
    for size in blocks:
        ranges.append(range(start, start + size))
        start += size
    return ranges


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables with radical coefficients."""

    __slots__ = ("_nvars", "_terms", "_hash")

    _nvars: int
    _terms: Dict[Monomial, RadicalScalar]
    _hash: Optional[int]

    def __init__(
        self, nvars: int, terms: Optional[Mapping[Monomial, ScalarLike]] = None
    ):
        if nvars < 1:
            raise DimensionMismatch("A polynomial needs at least one variable")
        cleaned: Dict[Monomial, RadicalScalar] = {}
        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != nvars:
                raise DimensionMismatch(
                    f"Monomial {monomial} does not have {nvars} exponents"
                )
            if any(e < 0 for e in monomial):
                raise DimensionMismatch(f"Negative exponent in {monomial}")
            value = RadicalScalar.coerce(coefficient)
            if monomial in cleaned:
                value = cleaned[monomial] + value
            cleaned[monomial] = value
        self._nvars = nvars
        self._terms = {m: c for m, c in cleaned.items() if c}
        self._hash = None

    @classmethod
    def _from_clean(cls, nvars: int, terms: Dict[Monomial, RadicalScalar]) -> Self:
        poly = object.__new__(cls)
        poly._nvars = nvars
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def _from_accumulator(
        cls, nvars: int, accumulator: Mapping[Monomial, Mapping[int, Fraction]]
    ) -> Self:
        terms: Dict[Monomial, RadicalScalar] = {}
        for monomial, radicals in accumulator.items():
            coefficient = RadicalScalar.from_accumulator(radicals)
            if coefficient:
                terms[monomial] = coefficient
        return cls._from_clean(nvars, terms)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> Self:
        return cls(nvars)

    @classmethod
    def constant(cls, value: ScalarLike, nvars: int) -> Self:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, index: int, nvars: int) -> Self:
        if not 0 <= index < nvars:
            raise DimensionMismatch(
                f"Variable index {index} out of range 0..{nvars - 1}"
            )
        exponents = [0] * nvars
        exponents[index] = 1
        return cls(nvars, {tuple(exponents): 1})

    @classmethod
    def monomial(
        cls, exponents: Sequence[int], coefficient: ScalarLike = 1
    ) -> Self:
        return cls(len(exponents), {tuple(exponents): coefficient})

    @classmethod
    def radius_squared(
        cls, nvars: int, variables: Optional[Sequence[int]] = None
    ) -> Self:
        """Sum of x_i^2 over ``variables`` (all variables by default)."""
        indices = range(nvars) if variables is None else variables
        terms: Dict[Monomial, ScalarLike] = {}
        for i in indices:
            exponents = [0] * nvars
            exponents[i] = 2
            terms[tuple(exponents)] = 1
        return cls(nvars, terms)

    # -- inspection -------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Monomial, RadicalScalar]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> List[Tuple[Monomial, RadicalScalar]]:
        """Terms in lexicographic order, x1 highest, largest monomial first."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(monomial_degree(m) for m in self._terms)

    def is_constant(self) -> bool:
        return all(monomial_degree(m) == 0 for m in self._terms)

    def constant_value(self) -> RadicalScalar:
        return self._terms.get((0,) * self._nvars, RadicalScalar.zero())

    def variables_used(self) -> frozenset:
        return frozenset(
            i for m in self._terms for i, e in enumerate(m) if e > 0
        )

    def depends_only_on(self, variables: Sequence[int]) -> bool:
        return self.variables_used() <= frozenset(variables)

    def homogeneous_degree(self) -> Optional[int]:
        """k when every monomial has total degree k; None otherwise or for zero."""
        degrees = {monomial_degree(m) for m in self._terms}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    # -- arithmetic -------------------------------------------------------

    def _check_compatible(self, other: "Polynomial") -> None:
        if other._nvars != self._nvars:
            raise DimensionMismatch(
                f"Polynomials in {self._nvars} and {other._nvars} variables",
                ["operands must share the variable count"],
            )

    def _coerce(self, other: object) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction, RadicalScalar)) and not isinstance(
            other, bool
        ):
            return Polynomial.constant(other, self._nvars)
        return None

    def __add__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs._terms:
            return self
        terms = dict(self._terms)
        for monomial, coefficient in rhs._terms.items():
            existing = terms.get(monomial)
            value = coefficient if existing is None else existing + coefficient
            if value:
                terms[monomial] = value
            else:
                terms.pop(monomial, None)
        return Polynomial._from_clean(self._nvars, terms)

    def __radd__(self, other: object) -> "Polynomial":
        return self.__add__(other)

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_clean(
            self._nvars, {m: -c for m, c in self._terms.items()}
        )

    def __sub__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Polynomial":
        return (-self).__add__(other)

    def scale(self, factor: ScalarLike) -> "Polynomial":
        value = RadicalScalar.coerce(factor)
        if not value:
            return Polynomial.zero(self._nvars)
        return Polynomial._from_clean(
            self._nvars, {m: c * value for m, c in self._terms.items()}
        )

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction, RadicalScalar)) and not isinstance(
            other, bool
        ):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        if not self._terms or not other._terms:
            return Polynomial.zero(self._nvars)
        accumulator: Dict[Monomial, Dict[int, Fraction]] = {}
        for m1, c1 in self._terms.items():
            items1 = tuple(c1.items())
            for m2, c2 in other._terms.items():
                monomial = tuple(x + y for x, y in zip(m1, m2))
                slot = accumulator.get(monomial)
                if slot is None:
                    slot = accumulator[monomial] = {}
                for d1, q1 in items1:
                    for d2, q2 in c2.items():
                        s, d = radical_product(d1, d2)
                        slot[d] = slot.get(d, Fraction(0)) + q1 * q2 * s
        return Polynomial._from_accumulator(self._nvars, accumulator)

    def __rmul__(self, other: object) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("Negative powers of polynomials are not polynomials")
        result = Polynomial.constant(1, self._nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # -- calculus ---------------------------------------------------------

    def partial(self, index: int) -> "Polynomial":
        """Partial derivative with respect to variable ``index`` (0-based)."""
        if not 0 <= index < self._nvars:
            raise DimensionMismatch(
                f"Variable index {index} out of range 0..{self._nvars - 1}"
            )
        terms: Dict[Monomial, RadicalScalar] = {}
        for monomial, coefficient in self._terms.items():
            exponent = monomial[index]
            if exponent == 0:
                continue
            lowered = monomial[:index] + (exponent - 1,) + monomial[index + 1 :]
            terms[lowered] = coefficient * exponent
        return Polynomial._from_clean(self._nvars, terms)

    def euler_operator(self, variables: Optional[Sequence[int]] = None) -> "Polynomial":
        """sum_i x_i * dp/dx_i over ``variables``; scales monomials by degree."""
        indices = range(self._nvars) if variables is None else variables
        terms: Dict[Monomial, RadicalScalar] = {}
        for monomial, coefficient in self._terms.items():
            weight = sum(monomial[i] for i in indices)
            if weight:
                terms[monomial] = coefficient * weight
        return Polynomial._from_clean(self._nvars, terms)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, point: Sequence[PointValue]) -> Union[RadicalScalar, float]:
        """
        Substitute a point.

        Exact when every coordinate is an int, Fraction or RadicalScalar;
        double precision as soon as one coordinate is a float.
        """
        if len(point) != self._nvars:
            raise DimensionMismatch(
                f"Point has {len(point)} coordinates, "
                f"polynomial has {self._nvars} variables"
            )
        if any(isinstance(x, float) for x in point):
            values = [float(x) for x in point]
            total = 0.0
            for monomial, coefficient in self._terms.items():
                product = float(coefficient)
                for x, e in zip(values, monomial):
                    if e:
                        product *= x**e
                total += product
            return total
        exact = [RadicalScalar.coerce(x) for x in point]
        result = RadicalScalar.zero()
        for monomial, coefficient in self._terms.items():
            product = coefficient
            for x, e in zip(exact, monomial):
                if e:
                    product = product * x**e
            result = result + product
        return result

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Vectorised float evaluation at each row of a (count, nvars) array."""
        points = np.asarray(points, dtype=float)
        if points.ndim != 2 or points.shape[1] != self._nvars:
            raise DimensionMismatch(
                f"Expected an array of shape (count, {self._nvars}), got {points.shape}"
            )
        total = np.zeros(points.shape[0])
        for monomial, coefficient in self._terms.items():
            column = np.full(points.shape[0], float(coefficient))
            for i, e in enumerate(monomial):
                if e:
                    column *= points[:, i] ** e
            total += column
        return total

    # -- sphere ideal -----------------------------------------------------

    def normal_form(self, blocks: Optional[Sequence[int]] = None) -> "Polynomial":
        return normal_form_mod_sphere(self, blocks)

    def divide_by_radius_squared(
        self, variables: Optional[Sequence[int]] = None
    ) -> Optional["Polynomial"]:
        return divide_by_radius_squared(self, variables)

    # -- reshaping --------------------------------------------------------

    def embed(self, nvars: int, offset: int = 0) -> "Polynomial":
        """Rename x_i to x_{i+offset} inside a space of ``nvars`` variables."""
        if offset < 0 or offset + self._nvars > nvars:
            raise DimensionMismatch(
                f"Cannot place {self._nvars} variables at offset {offset} in {nvars}"
            )
        before = (0,) * offset
        after = (0,) * (nvars - offset - self._nvars)
        return Polynomial._from_clean(
            nvars, {before + m + after: c for m, c in self._terms.items()}
        )

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction, RadicalScalar)) and not isinstance(
            other, bool
        ):
            return self == Polynomial.constant(other, self._nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __iter__(self) -> Iterator[Tuple[Monomial, RadicalScalar]]:
        return iter(self.sorted_terms())

    def __repr__(self) -> str:
        return f"Polynomial({self._nvars}, {self})"

    def __str__(self) -> str:
        """Canonical text in the CLI expression grammar."""
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for index, (monomial, coefficient) in enumerate(self.sorted_terms()):
            factors = []
            for i, e in enumerate(monomial):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            monomial_text = "*".join(factors)
            negative = False
            if coefficient.is_single_term():
                negative = coefficient.leading_sign() < 0
                magnitude = -coefficient if negative else coefficient
                if not monomial_text:
                    body = str(magnitude)
                elif magnitude == 1:
                    body = monomial_text
                else:
                    body = f"{magnitude}*{monomial_text}"
            else:
                body = (
                    f"({coefficient})*{monomial_text}"
                    if monomial_text
                    else f"({coefficient})"
                )
            if index == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)


def partial_derivative(p: Polynomial, index: int) -> Polynomial:
    return p.partial(index)


def evaluate(p: Polynomial, point: Sequence[PointValue]) -> Union[RadicalScalar, float]:
    return p.evaluate(point)


def homogeneous_degree(p: Polynomial) -> Optional[int]:
    return p.homogeneous_degree()


def normal_form_mod_sphere(
    p: Polynomial, blocks: Optional[Sequence[int]] = None
) -> Polynomial:
    """
    Canonical remainder of p modulo |x_b|^2 - 1 for every variable block b.

    The leading variable of each block is eliminated down to exponent 0 or 1
    by substituting x_lead^2 = 1 - (sum of the other squares in the block).
    With a single block this is the remainder of division by sum x_i^2 - 1
    under lex order x1 > ... > xN.
    """
    current = p
    for block in _block_ranges(p.nvars, blocks):
        current = _reduce_block(current, block)
    return current


def _reduce_block(p: Polynomial, block: range) -> Polynomial:
    lead = block[0]
    if not any(m[lead] >= 2 for m in p.terms):
        return p
    nvars = p.nvars
    others = Polynomial.radius_squared(nvars, block[1:])
    substitute = Polynomial.constant(1, nvars) - others
    powers: Dict[int, Polynomial] = {0: Polynomial.constant(1, nvars)}

    def power(q: int) -> Polynomial:
        if q not in powers:
            powers[q] = power(q - 1) * substitute
        return powers[q]

    result = Polynomial.zero(nvars)
    grouped: Dict[int, Dict[Monomial, RadicalScalar]] = {}
    for monomial, coefficient in p.terms.items():
        q, rest = divmod(monomial[lead], 2)
        reduced = monomial[:lead] + (rest,) + monomial[lead + 1 :]
        grouped.setdefault(q, {})[reduced] = coefficient
    for q, terms in sorted(grouped.items()):
        chunk = Polynomial._from_clean(nvars, terms)
        result = result + (chunk if q == 0 else chunk * power(q))
    return result


def divide_by_radius_squared(
    p: Polynomial, variables: Optional[Sequence[int]] = None
) -> Optional[Polynomial]:
    """
    Exact quotient q with p = (sum x_i^2) * q, or None when it does not exist.

    Long division by the radius polynomial with respect to its leading
    variable; the remainder is unique, and the quotient is re-multiplied as a
    final check.
    """
    indices = list(range(p.nvars) if variables is None else variables)
    if not indices:
        raise DimensionMismatch("Radius polynomial needs at least one variable")
    if p.is_zero():
        return p
    lead = indices[0]
    divisor = Polynomial.radius_squared(p.nvars, indices)
    remainder: Dict[Monomial, RadicalScalar] = dict(p.terms)
    quotient: Dict[Monomial, RadicalScalar] = {}
    top = max(m[lead] for m in remainder)
    for exponent in range(top, 1, -1):
        layer = [(m, c) for m, c in remainder.items() if m[lead] == exponent]
        for monomial, coefficient in layer:
            lowered = monomial[:lead] + (exponent - 2,) + monomial[lead + 1 :]
            previous = quotient.get(lowered, RadicalScalar.zero())
            quotient[lowered] = previous + coefficient
            for index in indices:
                target = list(lowered)
                target[index] += 2
                key = tuple(target)
                value = remainder.get(key, RadicalScalar.zero()) - coefficient
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
    if remainder:
        return None
    result = Polynomial(p.nvars, quotient)
    if result * divisor != p:
        logger.error(f"Radius division check failed for {p}")
        return None
    return result
