"""Parser for polynomial expressions in x and y."""
from fractions import Fraction
import re
from typing import List, NamedTuple, Optional

from .error import NegativeExponent, ParseError
from .poly import BivariatePoly

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([xy])|(\^|\*\*|[-+*/()]))")


class Token(NamedTuple):
    type: str
    value: str
    where: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(text, bad, f"Unexpected character '{text[bad]}'")
        if match.group(1):
            tokens.append(Token("num", match.group(1), match.start(1)))
        elif match.group(2):
            tokens.append(Token("var", match.group(2), match.start(2)))
        else:
            op = "^" if match.group(3) == "**" else match.group(3)
            tokens.append(Token("op", op, match.start(3)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self) -> Optional[Token]:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def _error(self, message: str) -> ParseError:
        where = self.token.where if self.token else len(self.text)
        return ParseError(self.text, where, message)

    def _at(self, value: str) -> bool:
        token = self.token
        return token is not None and token.type == "op" and token.value == value

    def advance(self) -> Token:
        token = self.token
        if token is None:
            raise self._error("Unexpected end of expression")
        self.index += 1
        return token

    def parse(self) -> BivariatePoly:
        if not self.tokens:
            raise ParseError(self.text, 0, "Empty expression")
        result = self.expression()
        if self.token is not None:
            raise self._error(f"Unexpected '{self.token.value}'")
        return result

    def expression(self) -> BivariatePoly:
        negate = False
        if self._at("-") or self._at("+"):
            negate = self.advance().value == "-"
        result = self.term()
        if negate:
            result = -result
        while self._at("+") or self._at("-"):
            op = self.advance().value
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def _starts_factor(self) -> bool:
        token = self.token
        if token is None:
            return False
        if token.type == "op":
            return token.value == "("
        return token.type in ("num", "var")

    def term(self) -> BivariatePoly:
        result = self.power()
        while True:
            if self._at("*"):
                self.advance()
                result = result * self.power()
            elif self._starts_factor():
                result = result * self.power()
            else:
                return result

    def power(self) -> BivariatePoly:
        base = self.atom()
        if not self._at("^"):
            return base
        self.advance()
        if self._at("-"):
            raise NegativeExponent(self.text, self.token.where)
        token = self.token
        if token is None or token.type != "num" or "." in token.value:
            raise self._error("Expected a natural number exponent")
        self.advance()
        return base ** int(token.value)

    def atom(self) -> BivariatePoly:
        token = self.token
        if token is None:
            raise self._error("Unexpected end of expression")
        if token.type == "num":
            self.advance()
            value = Fraction(token.value)
            if self._at("/"):
                self.advance()
                denom = self.token
                if denom is None or denom.type != "num" or "." in denom.value:
                    raise self._error("Expected an integer denominator")
                self.advance()
                if int(denom.value) == 0:
                    raise ParseError(self.text, denom.where, "Division by zero")
                value = value / int(denom.value)
            return BivariatePoly.constant(value)
        if token.type == "var":
            self.advance()
            return BivariatePoly.x() if token.value == "x" else BivariatePoly.y()
        if self._at("("):
            self.advance()
            inner = self.expression()
            if not self._at(")"):
                raise self._error("Expected ')'")
            self.advance()
            return inner
        if self._at("-"):
            self.advance()
            return -self.power()
        raise self._error(f"Unexpected '{token.value}'")


def parse(text: str) -> BivariatePoly:
    """Parse an expression such as ``2*x^4*y^2 - 0.1*x^8*y^4`` exactly."""
    return _Parser(text).parse()
