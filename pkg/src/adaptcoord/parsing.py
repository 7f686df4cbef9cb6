"""Expression parser for bivariate rational polynomials.

Grammar, loosest binding first:

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := ('+' | '-')* power
    power    := atom ['^' exponent]
    atom     := NUMBER | VARIABLE | '(' expr ')'
    exponent := NUMBER | '(' ['-'] NUMBER ')'
    NUMBER   := digits ['/' digits]

Variables are x1 and x2, with x and y accepted as aliases.  There is no
implicit multiplication and no division except inside rational literals;
exponents must be non-negative integer literals.  Errors carry 1-based
line and column positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly
from .errors import NonIntegerExponent, PolySyntaxError, UnknownVariable

_VARIABLES = {"x1": (1, 0), "x": (1, 0), "x2": (0, 1), "y": (0, 1)}
_PUNCT = set("+-*^()/")


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # "int", "var", "end", or the punctuation character itself
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(_Token("int", src[i:j], line, col))
            col += j - i
            i = j
        elif ch.isalpha():
            j = i
            while j < n and src[j].isalnum():
                j += 1
            name = src[i:j]
            if name not in _VARIABLES:
                raise UnknownVariable(
                    f"unknown variable {name!r}; use x1/x2 (or x/y)", line, col
                )
            tokens.append(_Token("var", name, line, col))
            col += j - i
            i = j
        elif ch in _PUNCT:
            tokens.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
        else:
            raise PolySyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise PolySyntaxError(
                f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        return self.advance()

    def parse(self) -> BiPoly:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise PolySyntaxError(
                f"unexpected {tok.text!r} after expression", tok.line, tok.col
            )
        return value

    def expr(self) -> BiPoly:
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.kind == "+" else value - rhs
        return value

    def term(self) -> BiPoly:
        value = self.factor()
        while self.peek().kind == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> BiPoly:
        sign = 1
        while self.peek().kind in ("+", "-"):
            if self.advance().kind == "-":
                sign = -sign
        value = self.power()
        return value if sign == 1 else -value

    def power(self) -> BiPoly:
        value = self.atom()
        if self.peek().kind == "^":
            self.advance()
            value = value ** self.exponent()
        return value

    def number(self) -> Fraction:
        tok = self.expect("int")
        value = Fraction(int(tok.text))
        if self.peek().kind == "/":
            self.advance()
            den = self.expect("int")
            if int(den.text) == 0:
                raise PolySyntaxError("zero denominator", den.line, den.col)
            value /= int(den.text)
        return value

    def atom(self) -> BiPoly:
        tok = self.peek()
        if tok.kind == "int":
            return BiPoly.constant(self.number())
        if tok.kind == "var":
            self.advance()
            j, k = _VARIABLES[tok.text]
            return BiPoly.monomial(j, k)
        if tok.kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise PolySyntaxError(
            f"expected a number, variable, or '(', found "
            f"{tok.text or 'end of input'!r}",
            tok.line,
            tok.col,
        )

    def exponent(self) -> int:
        tok = self.peek()
        negative = False
        parenthesized = tok.kind == "("
        if parenthesized:
            self.advance()
            if self.peek().kind == "-":
                self.advance()
                negative = True
        num = self.expect("int")
        if self.peek().kind == "/":
            raise NonIntegerExponent(
                "exponents must be integers", num.line, num.col
            )
        if parenthesized:
            self.expect(")")
        if negative:
            raise NonIntegerExponent(
                "exponents must be non-negative", num.line, num.col
            )
        return int(num.text)


def parse(src: str) -> BiPoly:
    """Parse an expression over x1/x2 into exact sparse form."""
    return _Parser(_tokenize(src)).parse()
