"""
Recursive-descent parser for exact polynomial expressions.

    expr     := ['+' | '-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | 'sqrt' '(' uint ')' | var | '(' expr ')'
    rational := uint ('/' uint)?
    var      := 'x' uint | 'x' | 'y' | 'z' | 'w'

Variables x1, x2, ... are 1-based; x, y, z, w alias x1..x4. Multiplication is
always explicit. Offsets in ParseError are positions in the input text.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, TypeVar

from biharmonic.errors import ParseError
from biharmonic.maps import PolyMap
from biharmonic.polyalg import Polynomial, RadicalScalar

logger = logging.getLogger(__name__)

ALIASES = {"x": 0, "y": 1, "z": 2, "w": 3}
BASE_START = ("number", "sqrt", "variable", "(")

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\S))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            # only trailing whitespace is left
            break
        kind = match.lastgroup or "op"
        value = match.group(kind)
        tokens.append(Token(kind, value, match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def variable_index(token: Token) -> int:
    """0-based index of a variable token, or ParseError for unknown identifiers."""
    name = token.text
    if name in ALIASES:
        return ALIASES[name]
    digits = re.fullmatch(r"x(\d+)", name)
    if digits is None or int(digits.group(1)) < 1:
        raise ParseError(
            f"Unknown identifier '{name}'", token.offset, ("variable", "sqrt")
        )
    return int(digits.group(1)) - 1


class ExpressionParser:
    """Parses one token stream; ``nvars`` fixes the polynomial ring."""

    def __init__(self, tokens: List[Token], nvars: int):
        self._tokens = tokens
        self._index = 0
        self._nvars = nvars

    @property
    def current(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self.current
        self._index += 1
        return token

    def accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self._index += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if self.current.kind == "op" and self.current.text == text:
            return self._advance()
        raise ParseError(
            f"Expected '{text}' but found {self._describe(self.current)}",
            self.current.offset,
            (text,),
        )

    def expect_end(self) -> None:
        if self.current.kind != "end":
            raise ParseError(
                f"Unexpected {self._describe(self.current)}",
                self.current.offset,
                ("end", "+", "-", "*", "^"),
            )

    @staticmethod
    def _describe(token: Token) -> str:
        return "end of input" if token.kind == "end" else f"'{token.text}'"

    def _uint(self) -> int:
        if self.current.kind != "number":
            raise ParseError(
                "Expected an unsigned integer but found "
                f"{self._describe(self.current)}",
                self.current.offset,
                ("number",),
            )
        return int(self._advance().text)

    def expression(self) -> Polynomial:
        negative = False
        if self.accept("-"):
            negative = True
        else:
            self.accept("+")
        total = self.term()
        if negative:
            total = -total
        while True:
            if self.accept("+"):
                total = total + self.term()
            elif self.accept("-"):
                total = total - self.term()
            else:
                return total

    def term(self) -> Polynomial:
        product = self.factor()
        while self.accept("*"):
            product = product * self.factor()
        return product

    def factor(self) -> Polynomial:
        base = self.base()
        if self.accept("^"):
            return base ** self._uint()
        return base

    def base(self) -> Polynomial:
        token = self.current
        if token.kind == "number":
            numerator = int(self._advance().text)
            if self.accept("/"):
                denominator_token = self.current
                denominator = self._uint()
                if denominator == 0:
                    raise ParseError(
                        "Division by zero in a rational literal",
                        denominator_token.offset,
                        ("number",),
                    )
                value = Fraction(numerator, denominator)
                return Polynomial.constant(value, self._nvars)
            return Polynomial.constant(numerator, self._nvars)
        if token.kind == "name" and token.text == "sqrt":
            self._advance()
            self.expect("(")
            radicand = self._uint()
            self.expect(")")
            return Polynomial.constant(RadicalScalar.sqrt(radicand), self._nvars)
        if token.kind == "name":
            index = variable_index(token)
            self._advance()
            return Polynomial.variable(index, self._nvars)
        if self.accept("("):
            inner = self.expression()
            self.expect(")")
            return inner
        raise ParseError(
            "Expected a number, sqrt, variable or '(' but found "
            f"{self._describe(token)}",
            token.offset,
            BASE_START,
        )


def required_nvars(tokens: List[Token]) -> int:
    """Smallest variable count covering every variable token (at least 1)."""
    needed = 1
    for token in tokens:
        if token.kind == "name" and token.text != "sqrt":
            needed = max(needed, variable_index(token) + 1)
    return needed


def _ring_size(tokens: List[Token], nvars: Optional[int]) -> int:
    needed = required_nvars(tokens)
    if nvars is None:
        return needed
    if nvars < needed:
        raise ParseError(
            f"Expression uses {needed} variables but the ring has {nvars}",
            0,
            error_details=[f"nvars: {nvars}"],
        )
    return nvars


Parsed = TypeVar("Parsed", Polynomial, PolyMap)


def _parse(
    text: str, nvars: Optional[int], rule: Callable[[ExpressionParser], Parsed]
) -> Parsed:
    tokens = tokenize(text)
    parser = ExpressionParser(tokens, _ring_size(tokens, nvars))
    return rule(parser)


def parse_polynomial(text: str, nvars: Optional[int] = None) -> Polynomial:
    """
    Parse one polynomial.

    Args:
        text: Expression in the grammar above
        nvars: Ring size; defaults to the largest variable index used

    Returns:
        Polynomial with exact coefficients

    Raises:
        ParseError: with the offset of the offending token and the accepted kinds
    """

    def rule(parser: ExpressionParser) -> Polynomial:
        result = parser.expression()
        parser.expect_end()
        return result

    return _parse(text, nvars, rule)


def parse_map(text: str, nvars: Optional[int] = None) -> PolyMap:
    """Parse ``[p1, p2, ...]`` into a PolyMap sharing one variable count."""

    def rule(parser: ExpressionParser) -> PolyMap:
        parser.expect("[")
        components = [parser.expression()]
        while parser.accept(","):
            components.append(parser.expression())
        parser.expect("]")
        parser.expect_end()
        return PolyMap(components)

    return _parse(text, nvars, rule)
