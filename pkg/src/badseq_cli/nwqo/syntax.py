"""Parsers and formatters for nwqo expressions, elements and sequences.

Expression grammar::

    sum     := product ("+" product)*
    product := postfix ("*" postfix)*
    postfix := atom ("^" "*" | "^" NAT)*
    atom    := "G" NAT | "Seg" NAT | "N" | "(" sum ")"

``A^*`` is the star of A and ``A^k`` the k-fold product A × … × A.

Element grammar::

    element := "a" NAT | NAT | "<" element "," element ">"
             | "inl" "(" element ")" | "inr" "(" element ")"
             | "[" (element ("," element)*)? "]"
    sequence := (element (";" element)*)?
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING

from badseq_cli.nwqo.expr import (
    Element,
    Gamma,
    InLeft,
    InRight,
    Letter,
    Nat,
    Number,
    NwqoExpr,
    Pair,
    Prod,
    Seg,
    Star,
    Sum,
    Word,
    power,
)
from badseq_cli.parsing import TokenStream, TokenType

if TYPE_CHECKING:
    from collections.abc import Sequence

_INDEXED = re.compile(r"^(G|Seg|a)(\d+)$")


def parse_nwqo(text: str) -> NwqoExpr:
    """Parse an nwqo expression.

    Raises:
        ParseError: On malformed input, with the failing position.
    """
    stream = TokenStream(text)
    expr = _sum(stream)
    stream.expect_end()
    return expr


def _sum(stream: TokenStream) -> NwqoExpr:
    expr = _product(stream)
    while stream.accept("+"):
        expr = Sum(expr, _product(stream))
    return expr


def _product(stream: TokenStream) -> NwqoExpr:
    expr = _postfix(stream)
    while stream.accept("*"):
        expr = Prod(expr, _postfix(stream))
    return expr


def _postfix(stream: TokenStream) -> NwqoExpr:
    expr = _atom(stream)
    while stream.accept("^"):
        if stream.accept("*"):
            expr = Star(expr)
        else:
            expr = power(expr, stream.expect_number())
    return expr


def _indexed(stream: TokenStream, prefix: str) -> int | None:
    """Read ``prefix NAT`` written either glued (``G3``) or spaced (``G 3``)."""
    token = stream.current
    if token.type != TokenType.IDENT:
        return None
    match = _INDEXED.match(token.value)
    if match and match.group(1) == prefix:
        stream.advance()
        return int(match.group(2))
    if token.value == prefix and stream.peek().type == TokenType.NUMBER:
        stream.advance()
        return stream.expect_number()
    return None


def _atom(stream: TokenStream) -> NwqoExpr:
    if (p := _indexed(stream, "G")) is not None:
        return Gamma(p)
    if (p := _indexed(stream, "Seg")) is not None:
        return Seg(p)
    if stream.current.type == TokenType.IDENT and stream.current.value == "N":
        stream.advance()
        return Nat()
    if stream.accept("("):
        expr = _sum(stream)
        stream.expect(")")
        return expr
    raise stream.error("expected G<p>, Seg<p>, N or '('")


def format_nwqo(expr: NwqoExpr) -> str:
    """Render an expression in the input grammar."""
    match expr:
        case Gamma(p):
            return f"G{p}"
        case Seg(p):
            return f"Seg{p}"
        case Nat():
            return "N"
        case Sum(left, right):
            right_text = format_nwqo(right)
            return f"{format_nwqo(left)} + {f'({right_text})' if isinstance(right, Sum) else right_text}"
        case Prod(left, right):
            left_text = format_nwqo(left)
            right_text = format_nwqo(right)
            if isinstance(left, Sum):
                left_text = f"({left_text})"
            if isinstance(right, Sum | Prod):
                right_text = f"({right_text})"
            return f"{left_text} * {right_text}"
        case Star(arg):
            text = format_nwqo(arg)
            return f"{text}^*" if isinstance(arg, Gamma | Seg | Nat) else f"({text})^*"
    raise TypeError(f"unknown nwqo expression {expr!r}")


def parse_element(text: str) -> Element:
    """Parse a single element.

    Raises:
        ParseError: On malformed input.
    """
    stream = TokenStream(text)
    element = _element(stream)
    stream.expect_end()
    return element


def parse_sequence(text: str) -> list[Element]:
    """Parse a ``;``-separated sequence of elements; blank text is empty.

    Raises:
        ParseError: On malformed input.
    """
    stream = TokenStream(text)
    if stream.current.type == TokenType.EOF:
        return []
    elements = [_element(stream)]
    while stream.accept(";"):
        elements.append(_element(stream))
    stream.expect_end()
    return elements


def _element(stream: TokenStream) -> Element:
    token = stream.current
    if token.type == TokenType.NUMBER:
        return Number(stream.expect_number())
    if (i := _indexed(stream, "a")) is not None:
        return Letter(i)
    if token.type == TokenType.IDENT and token.value in ("inl", "inr"):
        stream.advance()
        stream.expect("(")
        value = _element(stream)
        stream.expect(")")
        return InLeft(value) if token.value == "inl" else InRight(value)
    if stream.accept("<"):
        first = _element(stream)
        stream.expect(",")
        second = _element(stream)
        stream.expect(">")
        return Pair(first, second)
    if stream.accept("["):
        items: list[Element] = []
        if not stream.accept("]"):
            items.append(_element(stream))
            while stream.accept(","):
                items.append(_element(stream))
            stream.expect("]")
        return Word(tuple(items))
    raise stream.error("expected an element")


def format_element(element: Element) -> str:
    """Render an element in the input grammar."""
    match element:
        case Letter(i):
            return f"a{i}"
        case Number(k):
            return str(k)
        case InLeft(value):
            return f"inl({format_element(value)})"
        case InRight(value):
            return f"inr({format_element(value)})"
        case Pair(first, second):
            return f"<{format_element(first)}, {format_element(second)}>"
        case Word(items):
            return "[" + ", ".join(format_element(item) for item in items) + "]"
    raise TypeError(f"unknown element {element!r}")


def format_sequence(elements: Sequence[Element]) -> str:
    """Render a sequence with ``;`` separators."""
    return "; ".join(format_element(e) for e in elements)
