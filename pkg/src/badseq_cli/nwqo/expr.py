"""Normed wqo expressions and their elements.

An nwqo expression is a tree over finite alphabets Γ_p, initial segments
[p] of ℕ, ℕ itself, disjoint sums, products and finite words (Kleene
star). Elements mirror that tree: letters, naturals, injections, pairs
and words.
"""

from __future__ import annotations

from dataclasses import dataclass

from badseq_cli.errors import PreconditionError


@dataclass(frozen=True, slots=True)
class Gamma:
    """Alphabet Γ_p of p pairwise incomparable letters, all of norm 0."""

    p: int

    def __post_init__(self) -> None:
        if self.p < 0:
            raise PreconditionError(f"alphabet size must be >= 0, got {self.p}")


@dataclass(frozen=True, slots=True)
class Seg:
    """Initial segment [p] = {0, …, p-1} of ℕ with norm |k| = k."""

    p: int

    def __post_init__(self) -> None:
        if self.p < 0:
            raise PreconditionError(f"segment size must be >= 0, got {self.p}")


@dataclass(frozen=True, slots=True)
class Nat:
    """The naturals with their usual order and norm."""


@dataclass(frozen=True, slots=True)
class Sum:
    """Disjoint sum; elements of different sides are incomparable."""

    left: NwqoExpr
    right: NwqoExpr


@dataclass(frozen=True, slots=True)
class Prod:
    """Cartesian product ordered componentwise, normed by the max."""

    left: NwqoExpr
    right: NwqoExpr


@dataclass(frozen=True, slots=True)
class Star:
    """Finite words ordered by subword embedding."""

    arg: NwqoExpr


NwqoExpr = Gamma | Seg | Nat | Sum | Prod | Star


@dataclass(frozen=True, slots=True)
class Letter:
    """The letter a_i of an alphabet, 1-based."""

    index: int


@dataclass(frozen=True, slots=True)
class Number:
    """A natural number element."""

    value: int


@dataclass(frozen=True, slots=True)
class InLeft:
    """Left injection into a sum."""

    value: Element


@dataclass(frozen=True, slots=True)
class InRight:
    """Right injection into a sum."""

    value: Element


@dataclass(frozen=True, slots=True)
class Pair:
    """Element of a product."""

    first: Element
    second: Element


@dataclass(frozen=True, slots=True)
class Word:
    """Finite word over the argument of a star."""

    items: tuple[Element, ...] = ()

    def __len__(self) -> int:
        return len(self.items)


Element = Letter | Number | InLeft | InRight | Pair | Word

ZERO_NWQO = Gamma(0)
ONE_NWQO = Gamma(1)


def power(expr: NwqoExpr, k: int) -> NwqoExpr:
    """The k-fold product expr × … × expr; Γ_1 when k = 0."""
    if k == 0:
        return ONE_NWQO
    result = expr
    for _ in range(k - 1):
        result = Prod(result, expr)
    return result


def sum_of(parts: list[NwqoExpr]) -> NwqoExpr:
    """Left-folded sum of parts; Γ_0 when empty."""
    if not parts:
        return ZERO_NWQO
    result = parts[0]
    for part in parts[1:]:
        result = Sum(result, part)
    return result


def product_of(parts: list[NwqoExpr]) -> NwqoExpr:
    """Left-folded product of parts; Γ_1 when empty."""
    if not parts:
        return ONE_NWQO
    result = parts[0]
    for part in parts[1:]:
        result = Prod(result, part)
    return result
