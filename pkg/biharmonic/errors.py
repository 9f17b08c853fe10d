from typing import Any, Iterable, List, Optional


class BiharmonicError(Exception):
    """Base exception for every error raised by the biharmonic package."""

    def __init__(self, message: str, error_details: Optional[List[str]] = None):
        self.message = message
        self.error_details = error_details or []
        super().__init__(self.message)

    def to_dict(self) -> dict:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "error_details": list(self.error_details),
        }


class UnsupportedDivision(BiharmonicError):
    """Raised when dividing by zero or by a radical with more than one term."""

    pass


class DimensionMismatch(BiharmonicError):
    """Raised when variable counts, component counts or indices do not line up."""

    pass


class NotASphereMap(BiharmonicError):
    """Raised when a map matches none of the sphere-restriction patterns."""

    pass


class RadiiDoNotSumToOne(NotASphereMap):
    """Raised when the squared radii of the two form blocks do not add up to 1."""

    pass


class WrongKind(BiharmonicError):
    """Raised when an engine is handed metadata of a kind it does not serve."""

    pass


class FactorsNotHarmonic(BiharmonicError):
    """Raised when a closed form for harmonic factors meets non-harmonic ones."""

    pass


class NotHarmonicForm(BiharmonicError):
    """Raised when an identity for harmonic forms is requested on a non-harmonic map."""

    pass


class ZeroMap(BiharmonicError):
    """Raised when an operation needs a nonzero map."""

    pass


class NotAForm(BiharmonicError):
    """Raised when a map is not a form (|G|^2 is not r^2 |x|^(2k))."""

    pass


class RadiusNotRepresentable(BiharmonicError):
    """Raised when a square root leaves the radical ring."""

    pass


class UnknownName(BiharmonicError):
    """Raised for gallery names and source constructors that do not exist."""

    pass


class ParseError(BiharmonicError):
    """
    Raised by the expression and source parsers.

    Carries the byte offset of the offending token and the set of token kinds
    that would have been accepted there.
    """

    def __init__(
        self,
        message: str,
        offset: int = 0,
        expected: Optional[Iterable[str]] = None,
        error_details: Optional[List[str]] = None,
    ):
        self.offset = offset
        self.expected = frozenset(expected or ())
        details = list(error_details or [])
        details.append(f"offset: {offset}")
        if self.expected:
            details.append(f"expected one of: {', '.join(sorted(self.expected))}")
        super().__init__(message, details)

    def to_dict(self) -> dict:
        result = super().to_dict()
        result["offset"] = self.offset
        result["expected"] = sorted(self.expected)
        return result


class WrongDimensions(BiharmonicError):
    """Raised when a command needs a different domain or codomain size."""

    pass


class RouteDisagreement(BiharmonicError):
    """Raised when the general and the specialised routes give different fields."""

    pass


class InvalidArgument(BiharmonicError):
    """Raised for out-of-range numeric arguments."""

    pass


def describe(error: Any) -> str:
    """One-line rendering used by the CLI for stderr output."""
    if isinstance(error, BiharmonicError):
        details = "; ".join(error.error_details)
        return f"{type(error).__name__}: {error.message}" + (
            f" ({details})" if details else ""
        )
    return f"{type(error).__name__}: {error}"
