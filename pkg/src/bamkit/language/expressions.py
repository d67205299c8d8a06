"""Tokenizer, parser and printer for formula right-hand sides.

Grammar (left associative within a level, * and / bind tighter):

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := NUMBER | sign NUMBER | IDENT | "(" expr ")"

An identifier is a maximal run of words not interrupted by an operator, a
parenthesis or the end of the text. A word that parses entirely as a number is
a number literal and can never be part of an identifier.
"""

import math
import re
from collections.abc import Callable
from dataclasses import dataclass
from decimal import Decimal
from typing import Literal

from bamkit.ports.exceptions import MalformedFormulaError

from .ast import BinaryOp, Expr, NumberLiteral, Paren, VariableRef

# en dash, em dash, minus sign; multiplication and division signs
_DASHES = str.maketrans({"–": "-", "—": "-", "−": "-"})
_OPERATOR_ALIASES = str.maketrans({"×": "*", "÷": "/"})

_NUMBER = re.compile(r"^(?:\d{1,3}(?:,\d{3})+|\d+)(?:\.\d+)?$|^\.\d+$")
_SPLIT = re.compile(r"\s*([-+*/()])\s*|\s+")

TokenKind = Literal["op", "lparen", "rparen", "number", "word"]


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str


def normalize_operators(text: str) -> str:
    """Map Unicode dashes and arithmetic signs to their ASCII operators."""
    return text.translate(_DASHES).translate(_OPERATOR_ALIASES)


def parse_number(text: str) -> float | None:
    """Parse a number token (thousands separators allowed); None if not a number."""
    if not _NUMBER.match(text):
        return None
    return float(text.replace(",", ""))


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    for piece in _SPLIT.split(normalize_operators(text)):
        if not piece:
            continue
        if piece in "+-*/":
            tokens.append(Token("op", piece))
        elif piece == "(":
            tokens.append(Token("lparen", piece))
        elif piece == ")":
            tokens.append(Token("rparen", piece))
        elif parse_number(piece) is not None:
            tokens.append(Token("number", piece))
        else:
            tokens.append(Token("word", piece))
    return tokens


class _ExpressionParser:
    """Recursive descent over a token list."""

    def __init__(self, tokens: list[Token], line: int | None):
        self.tokens = tokens
        self.pos = 0
        self.line = line

    def error(self, message: str) -> MalformedFormulaError:
        return MalformedFormulaError(message, line=self.line)

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self) -> Expr:
        if not self.tokens:
            raise self.error("Empty expression")
        expr = self.expr()
        token = self.peek()
        if token is not None:
            if token.kind == "rparen":
                raise self.error("Unbalanced parentheses: unexpected ')'")
            raise self.error(f"Unexpected '{token.text}' after complete expression")
        return expr

    def expr(self) -> Expr:
        left = self.term()
        while (token := self.peek()) is not None and token.text in ("+", "-"):
            self.advance()
            left = BinaryOp(token.text, left, self.term())  # type: ignore[arg-type]
        return left

    def term(self) -> Expr:
        left = self.factor()
        while (token := self.peek()) is not None and token.text in ("*", "/"):
            self.advance()
            left = BinaryOp(token.text, left, self.factor())  # type: ignore[arg-type]
        return left

    def factor(self) -> Expr:
        token = self.peek()
        if token is None:
            raise self.error("Dangling operator at end of expression")

        if token.kind == "op":
            nxt = (
                self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else None
            )
            if token.text in "+-" and nxt is not None and nxt.kind == "number":
                self.advance()
                value = self.number(self.advance())
                return NumberLiteral(-value if token.text == "-" else value)
            raise self.error(f"Dangling operator '{token.text}'")

        if token.kind == "lparen":
            self.advance()
            if (inner := self.peek()) is not None and inner.kind == "rparen":
                raise self.error("Empty parentheses")
            child = self.expr()
            closing = self.peek()
            if closing is None or closing.kind != "rparen":
                raise self.error("Unbalanced parentheses: missing ')'")
            self.advance()
            return Paren(child)

        if token.kind == "rparen":
            raise self.error("Unbalanced parentheses: unexpected ')'")

        if token.kind == "number":
            value = self.number(self.advance())
            if (nxt := self.peek()) is not None and nxt.kind in ("word", "number"):
                raise self.error(
                    f"Number '{token.text}' cannot be part of a variable name"
                )
            return NumberLiteral(value)

        words = [self.advance().text]
        while (nxt := self.peek()) is not None and nxt.kind in ("word", "number"):
            if nxt.kind == "number":
                raise self.error(
                    f"Number '{nxt.text}' cannot be part of a variable name"
                )
            words.append(self.advance().text)
        return VariableRef(" ".join(words))

    def number(self, token: Token) -> float:
        value = parse_number(token.text)
        assert value is not None
        return value


def parse_expression(text: str, line: int | None = None) -> Expr:
    """Parse the right-hand side of a formula.

    Args:
        text: Expression text (everything right of the first '=')
        line: Source line number used in error messages

    Raises:
        MalformedFormulaError: On dangling operators, empty or unbalanced parentheses
    """
    return _ExpressionParser(tokenize(text), line).parse()


def format_number(value: float) -> str:
    """Shortest fixed-point text that parses back to exactly the same float."""
    if not math.isfinite(value):
        return repr(value)
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return format(Decimal(repr(value)), "f")


def format_expression(
    expr: Expr, name_of: Callable[[VariableRef], str] | None = None
) -> str:
    """Render an expression infix with single spaces around operators.

    Args:
        expr: Expression to render
        name_of: Optional mapping function from a VariableRef to the text used
            in its place (used to substitute defined names)
    """
    match expr:
        case VariableRef():
            return name_of(expr) if name_of else expr.name
        case NumberLiteral(value=value):
            return format_number(value)
        case BinaryOp(op=op, left=left, right=right):
            return (
                f"{format_expression(left, name_of)} {op} "
                f"{format_expression(right, name_of)}"
            )
        case Paren(child=child):
            return f"({format_expression(child, name_of)})"
    raise TypeError(f"Not an expression node: {expr!r}")
