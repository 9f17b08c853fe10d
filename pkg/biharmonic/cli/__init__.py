"""Source parsing, the verification battery and the ``biharmonic`` command."""

from .parser import parse_map, parse_polynomial
from .sources import ResolvedSource, resolve_source, source_map

__all__ = [
    "ResolvedSource",
    "parse_map",
    "parse_polynomial",
    "resolve_source",
    "source_map",
]
