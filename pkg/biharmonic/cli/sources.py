"""
Map sources accepted on the command line.

    source   := name | 'gallery:' name | 'circle:' uint | 'identity:' uint
              | 'diagonal(' source ',' source ',' rational ')'
              | 'product(' source ',' source ',' rational ')'
              | 'xg(' source ')' | 'radial(' source ',' uint ')'
              | 'stack(' source ',' source ')' | 'tiso(' source ')'
              | '[' expr (',' expr)* ']'
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from biharmonic.cli.parser import parse_map
from biharmonic.constructors import (
    diagonal_sum,
    hopf_isometry_transform,
    named_form,
    product_map,
    radial_multiple,
    stack,
    x_times_g,
)
from biharmonic.errors import ParseError, UnknownName
from biharmonic.maps import (
    DiagonalMeta,
    MapKind,
    PolyMap,
    ProductMeta,
    SphereMapMeta,
)

logger = logging.getLogger(__name__)

Hint = Union[None, MapKind, SphereMapMeta]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*")
_UINT = re.compile(r"\d+")
_RATIONAL = re.compile(r"(\d+)(?:\s*/\s*(\d+))?")


@dataclass(frozen=True)
class ResolvedSource:
    """A parsed source: the map and what is known about its kind."""

    text: str
    map: PolyMap
    hint: Hint = None


Argument = Union[ResolvedSource, Fraction, int]


class SourceParser:
    def __init__(self, text: str):
        self.text = text
        self.position = 0

    def _skip(self) -> None:
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.position : self.position + 1]

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            found = self._peek() or "end of input"
            raise ParseError(
                f"Expected '{char}' but found '{found}'", self.position, (char,)
            )
        self.position += 1

    def _match(self, pattern: "re.Pattern[str]", kind: str) -> "re.Match[str]":
        self._skip()
        match = pattern.match(self.text, self.position)
        if match is None:
            raise ParseError(f"Expected {kind}", self.position, (kind,))
        self.position = match.end()
        return match

    def _uint(self) -> int:
        return int(self._match(_UINT, "number").group(0))

    def _rational(self) -> Fraction:
        start = self.position
        match = self._match(_RATIONAL, "rational")
        denominator = int(match.group(2) or 1)
        if denominator == 0:
            raise ParseError(
                "Division by zero in a rational literal", start, ("number",)
            )
        return Fraction(int(match.group(1)), denominator)

    def parse(self) -> ResolvedSource:
        source = self.source()
        if self._peek():
            raise ParseError(
                f"Unexpected '{self._peek()}' after the source", self.position, ("end",)
            )
        return source

    def _inline(self) -> ResolvedSource:
        start = self.position
        depth = 0
        end = start
        while end < len(self.text):
            char = self.text[end]
            depth += {"[": 1, "]": -1}.get(char, 0)
            end += 1
            if depth == 0:
                break
        if depth != 0:
            raise ParseError("Unclosed '['", len(self.text), ("]",))
        body = self.text[start:end]
        try:
            F = parse_map(body)
        except ParseError as error:
            raise ParseError(
                error.message, start + error.offset, error.expected
            ) from None
        self.position = end
        return ResolvedSource(body, F)

    def source(self) -> ResolvedSource:
        self._skip()
        start = self.position
        if self._peek() == "[":
            return self._inline()
        name = self._match(_NAME, "name").group(0)
        if self._peek() == ":":
            self.position += 1
            if name == "gallery":
                argument = self._match(_NAME, "name").group(0)
                return self._gallery(argument, start)
            if name in ("circle", "identity"):
                return self._gallery(f"{name}:{self._uint()}", start)
            raise UnknownName(
                f"Unknown source prefix '{name}:'", ["gallery, circle, identity"]
            )
        if self._peek() == "(":
            return self._construction(name, start)
        return self._gallery(name, start)

    def _gallery(self, name: str, start: int) -> ResolvedSource:
        entry = named_form(name)
        text = self.text[start : self.position].strip()
        return ResolvedSource(text, entry.map, entry.meta)

    def _arguments(self, kinds: Tuple[str, ...]) -> List[Argument]:
        self._expect("(")
        values: List[Argument] = []
        for index, kind in enumerate(kinds):
            if index:
                self._expect(",")
            if kind == "source":
                values.append(self.source())
            elif kind == "rational":
                values.append(self._rational())
            else:
                values.append(self._uint())
        self._expect(")")
        return values

    def _construction(self, name: str, start: int) -> ResolvedSource:
        if name not in CONSTRUCTIONS:
            raise UnknownName(
                f"Unknown construction '{name}'", [f"known: {', '.join(CONSTRUCTIONS)}"]
            )
        kinds, build = CONSTRUCTIONS[name]
        arguments = self._arguments(kinds)
        F, hint = build(*arguments)
        text = self.text[start : self.position].strip()
        logger.debug(f"Built {text} with {len(F)} components in {F.nvars} variables")
        return ResolvedSource(text, F, hint)


def _diagonal(
    a: ResolvedSource, b: ResolvedSource, r1_sq: Fraction
) -> Tuple[PolyMap, DiagonalMeta]:
    return diagonal_sum(a.map, b.map, r1_sq)


def _product(
    a: ResolvedSource, b: ResolvedSource, r1_sq: Fraction
) -> Tuple[PolyMap, ProductMeta]:
    return product_map(a.map, b.map, r1_sq)


Builder = Callable[..., Tuple[PolyMap, Hint]]

CONSTRUCTIONS: Dict[str, Tuple[Tuple[str, ...], Builder]] = {
    "diagonal": (("source", "source", "rational"), _diagonal),
    "product": (("source", "source", "rational"), _product),
    "xg": (("source",), lambda a: (x_times_g(a.map), None)),
    "radial": (("source", "uint"), lambda a, p: (radial_multiple(a.map, p), None)),
    "stack": (("source", "source"), lambda a, b: (stack(a.map, b.map), None)),
    "tiso": (("source",), lambda a: (hopf_isometry_transform(a.map), None)),
}


def resolve_source(text: str) -> ResolvedSource:
    """
    Parse a source expression and build its map.

    Raises:
        ParseError: for malformed text, with the offset into ``text``
        UnknownName: for unknown gallery names or constructions
    """
    return SourceParser(text).parse()


def source_map(text: str) -> Tuple[PolyMap, Optional[Hint]]:
    resolved = resolve_source(text)
    return resolved.map, resolved.hint
