"""Parser for ordinal terms.

Grammar (``w`` or ``ω`` for omega, whitespace insignificant)::

    sum     := product ("+" product)*
    product := power ("*" NAT)*
    power   := "w" ("^" exp)? | NAT | "(" sum ")"
    exp     := "w" ("^" exp)? | NAT | "(" sum ")"

Sums are kept as written, so ``1+w`` parses to a term that is not in
Cantor normal form. ``t*n`` is the n-fold sum t + … + t.
"""

from __future__ import annotations

from badseq_cli.ordinals.terms import (
    ONE,
    OrdinalTerm,
    format_ordinal,
    make_term,
    nat,
    omega_power,
    syntactic_sum,
)
from badseq_cli.parsing import TokenStream, TokenType

__all__ = ["format_ordinal", "parse_ordinal"]


def parse_ordinal(text: str) -> OrdinalTerm:
    """Parse an ordinal term.

    Args:
        text: Input text.

    Returns:
        The parsed term.

    Raises:
        ParseError: On malformed input, with the failing position.
    """
    stream = TokenStream(text)
    term = _sum(stream)
    stream.expect_end()
    return term


def _sum(stream: TokenStream) -> OrdinalTerm:
    term = _product(stream)
    while stream.accept("+"):
        term = syntactic_sum(term, _product(stream))
    return term


def _product(stream: TokenStream) -> OrdinalTerm:
    term = _power(stream)
    while stream.accept("*"):
        times = stream.expect_number()
        term = make_term(term.summands * times)
    return term


def _power(stream: TokenStream) -> OrdinalTerm:
    token = stream.current
    if token.type == TokenType.NUMBER:
        return nat(stream.expect_number())
    if token.type == TokenType.IDENT and token.value == "w":
        stream.advance()
        if stream.accept("^"):
            return omega_power(_power(stream))
        return omega_power(ONE)
    if stream.accept("("):
        term = _sum(stream)
        stream.expect(")")
        return term
    raise stream.error("expected an ordinal term")
