"""Shared tokenizer for the ordinal, nwqo, element and control grammars.

All grammars in this package are small enough for recursive-descent
parsers over one token stream. Tokens carry their character position so
that parse errors can point at the offending input.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum

from badseq_cli.errors import ParseError

_SYMBOLS = frozenset("+*^()[]<>,;")


class TokenType(StrEnum):
    """Kinds of tokens."""

    NUMBER = "number"
    IDENT = "ident"
    SYMBOL = "symbol"
    EOF = "eof"


@dataclass(frozen=True, slots=True)
class Token:
    """A token with its type, text and character position."""

    type: TokenType
    value: str
    pos: int


class Lexer:
    """Tokenizer producing NUMBER, IDENT, SYMBOL and a final EOF token.

    The letter ω is read as the identifier ``w``.
    """

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _read_while(self, predicate: Callable[[str], bool]) -> str:
        start = self.pos
        while self._peek() and predicate(self._peek()):
            self.pos += 1
        return self.text[start : self.pos]

    def tokenize(self) -> list[Token]:
        """Split the input into tokens.

        Returns:
            Tokens ending with an EOF token.

        Raises:
            ParseError: On a character no grammar uses.
        """
        tokens: list[Token] = []
        while True:
            self._read_while(str.isspace)
            ch = self._peek()
            start = self.pos
            if not ch:
                tokens.append(Token(TokenType.EOF, "", start))
                return tokens
            if ch.isdigit():
                tokens.append(Token(TokenType.NUMBER, self._read_while(str.isdigit), start))
            elif ch == "ω":
                self.pos += 1
                tokens.append(Token(TokenType.IDENT, "w", start))
            elif ch.isalpha() or ch == "_":
                word = self._read_while(lambda c: c.isalnum() or c == "_")
                tokens.append(Token(TokenType.IDENT, word, start))
            elif ch in _SYMBOLS:
                self.pos += 1
                tokens.append(Token(TokenType.SYMBOL, ch, start))
            else:
                raise ParseError(f"unexpected character {ch!r}", self.text, start)


class TokenStream:
    """Cursor over a token list with the usual peek/advance/expect helpers."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = Lexer(text).tokenize()
        self.index = 0

    @property
    def current(self) -> Token:
        """The token under the cursor."""
        return self.tokens[self.index]

    def peek(self, offset: int = 1) -> Token:
        """Look ahead without consuming.

        Args:
            offset: How many tokens past the current one.

        Returns:
            The token, or the final EOF token past the end.
        """
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        """Consume and return the current token."""
        token = self.current
        if token.type != TokenType.EOF:
            self.index += 1
        return token

    def at_symbol(self, symbol: str) -> bool:
        """Check whether the current token is the given symbol."""
        return self.current.type == TokenType.SYMBOL and self.current.value == symbol

    def accept(self, symbol: str) -> bool:
        """Consume the given symbol if present.

        Returns:
            True if the symbol was consumed.
        """
        if self.at_symbol(symbol):
            self.advance()
            return True
        return False

    def expect(self, symbol: str) -> Token:
        """Consume the given symbol or fail.

        Raises:
            ParseError: If the current token differs.
        """
        if not self.at_symbol(symbol):
            raise self.error(f"expected {symbol!r}")
        return self.advance()

    def expect_number(self) -> int:
        """Consume a natural number literal.

        Raises:
            ParseError: If the current token is not a number.
        """
        if self.current.type != TokenType.NUMBER:
            raise self.error("expected a natural number")
        return int(self.advance().value)

    def expect_end(self) -> None:
        """Fail unless all input was consumed.

        Raises:
            ParseError: On trailing input.
        """
        if self.current.type != TokenType.EOF:
            raise self.error(f"unexpected trailing input {self.current.value!r}")

    def error(self, message: str) -> ParseError:
        """Build a ParseError positioned at the current token."""
        found = self.current.value or "end of input"
        return ParseError(f"{message}, found {found!r}", self.text, self.current.pos)
