"""Ordinal terms and the operations of Cantor normal form arithmetic.

A term ω^β1·c1 + … + ω^βm·cm is stored as its list of (exponent,
coefficient) summands. The representation is syntactic: exponents need
not decrease, so terms such as 1 + ω are kept as written. Comparison,
natural sum and natural product are only defined on terms in Cantor
normal form (CNF); `to_cnf` computes the ordinal a term denotes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import cmp_to_key
from typing import TYPE_CHECKING

from badseq_cli.errors import PreconditionError
from badseq_cli.models import Trichotomy

if TYPE_CHECKING:
    from collections.abc import Iterable


class Ordering(IntEnum):
    """Result of an ordinal comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True, slots=True)
class OrdinalTerm:
    """A term ω^β1·c1 + … + ω^βm·cm with every ci ≥ 1.

    Adjacent summands never share the same exponent; `make_term` merges them.
    The empty sum is 0.
    """

    summands: tuple[tuple[OrdinalTerm, int], ...] = ()

    @property
    def is_zero(self) -> bool:
        """Whether this is the term 0."""
        return not self.summands

    def as_natural(self) -> int | None:
        """Return the natural this term denotes, or None if it is infinite."""
        if self.is_zero:
            return 0
        if len(self.summands) == 1 and self.summands[0][0].is_zero:
            return self.summands[0][1]
        return None

    def __str__(self) -> str:
        return format_ordinal(self)


def make_term(summands: Iterable[tuple[OrdinalTerm, int]]) -> OrdinalTerm:
    """Build a term, dropping zero coefficients and merging equal neighbours.

    Args:
        summands: (exponent, coefficient) pairs in written order.

    Returns:
        The term.
    """
    merged: list[tuple[OrdinalTerm, int]] = []
    for exponent, coeff in summands:
        if coeff < 0:
            raise PreconditionError(f"negative coefficient {coeff}")
        if coeff == 0:
            continue
        if merged and merged[-1][0] == exponent:
            merged[-1] = (exponent, merged[-1][1] + coeff)
        else:
            merged.append((exponent, coeff))
    return OrdinalTerm(tuple(merged))


def nat(k: int) -> OrdinalTerm:
    """The natural k as a term."""
    return make_term([(ZERO, k)])


def omega_power(exponent: OrdinalTerm, coeff: int = 1) -> OrdinalTerm:
    """The term ω^exponent·coeff."""
    return make_term([(exponent, coeff)])


def syntactic_sum(left: OrdinalTerm, right: OrdinalTerm) -> OrdinalTerm:
    """Concatenate two terms as written (ordinal addition on notation)."""
    return make_term(left.summands + right.summands)


ZERO = OrdinalTerm()
ONE = OrdinalTerm(((ZERO, 1),))
OMEGA = OrdinalTerm(((ONE, 1),))


def _cmp(a: OrdinalTerm, b: OrdinalTerm) -> int:
    for (ea, ca), (eb, cb) in zip(a.summands, b.summands, strict=False):
        by_exponent = _cmp(ea, eb)
        if by_exponent:
            return by_exponent
        if ca != cb:
            return -1 if ca < cb else 1
    return (len(a.summands) > len(b.summands)) - (len(a.summands) < len(b.summands))


def is_cnf(a: OrdinalTerm) -> bool:
    """Check that exponents are in CNF and strictly decreasing."""
    for exponent, _ in a.summands:
        if not is_cnf(exponent):
            return False
    return all(
        _cmp(left[0], right[0]) > 0 for left, right in zip(a.summands, a.summands[1:], strict=False)
    )


def _require_cnf(*terms: OrdinalTerm) -> None:
    for term in terms:
        if not is_cnf(term):
            raise PreconditionError(f"term {format_ordinal(term)} is not in Cantor normal form")


def compare(a: OrdinalTerm, b: OrdinalTerm) -> Ordering:
    """Compare two CNF terms.

    Args:
        a: Left term.
        b: Right term.

    Returns:
        The ordering of a relative to b.

    Raises:
        PreconditionError: If either term is not in CNF.
    """
    _require_cnf(a, b)
    return Ordering(_cmp(a, b))


def cnf_key(a: OrdinalTerm) -> object:
    """Sort key ordering CNF terms by the ordinal they denote."""
    return cmp_to_key(_cmp)(a)


def to_cnf(a: OrdinalTerm) -> OrdinalTerm:
    """Compute the CNF of the ordinal a term denotes.

    A summand ω^β·c followed by a larger power is absorbed by it.

    Args:
        a: Any term.

    Returns:
        The equivalent CNF term.
    """
    stack: list[tuple[OrdinalTerm, int]] = []
    for exponent, coeff in a.summands:
        exponent = to_cnf(exponent)
        while stack and _cmp(stack[-1][0], exponent) < 0:
            stack.pop()
        if stack and stack[-1][0] == exponent:
            stack[-1] = (exponent, stack[-1][1] + coeff)
        else:
            stack.append((exponent, coeff))
    return OrdinalTerm(tuple(stack))


def _collect(pairs: Iterable[tuple[OrdinalTerm, int]]) -> OrdinalTerm:
    coefficients: dict[OrdinalTerm, int] = {}
    for exponent, coeff in pairs:
        coefficients[exponent] = coefficients.get(exponent, 0) + coeff
    ordered = sorted(coefficients.items(), key=lambda item: cnf_key(item[0]), reverse=True)
    return make_term(ordered)


def natural_sum(a: OrdinalTerm, b: OrdinalTerm) -> OrdinalTerm:
    """Hessenberg natural sum a ⊕ b of CNF terms.

    Raises:
        PreconditionError: If either term is not in CNF.
    """
    _require_cnf(a, b)
    return _collect(a.summands + b.summands)


def natural_product(a: OrdinalTerm, b: OrdinalTerm) -> OrdinalTerm:
    """Hessenberg natural product a ⊗ b of CNF terms.

    ω^e·c ⊗ ω^f·d = ω^(e⊕f)·(c·d), extended by distributivity over ⊕.

    Raises:
        PreconditionError: If either term is not in CNF.
    """
    _require_cnf(a, b)
    return _collect(
        (natural_sum(ea, eb), ca * cb) for ea, ca in a.summands for eb, cb in b.summands
    )


def leanness(a: OrdinalTerm) -> int:
    """Largest natural appearing in a, coefficients and exponents included.

    A term is x-lean when its leanness is at most x.
    """
    return max((max(coeff, leanness(exponent)) for exponent, coeff in a.summands), default=0)


def classify(a: OrdinalTerm) -> Trichotomy:
    """Tell zero, successor and limit terms apart by their last summand."""
    if a.is_zero:
        return Trichotomy.ZERO
    return Trichotomy.SUCCESSOR if a.summands[-1][0].is_zero else Trichotomy.LIMIT


def format_ordinal(a: OrdinalTerm) -> str:
    """Render a term in the input grammar (``w`` stands for ω).

    Args:
        a: The term.

    Returns:
        Text that `parse_ordinal` reads back to the same term.
    """
    if a.is_zero:
        return "0"
    parts: list[str] = []
    for exponent, coeff in a.summands:
        if exponent.is_zero:
            parts.append(str(coeff))
            continue
        k = exponent.as_natural()
        if k == 1:
            base = "w"
        elif k is not None:
            base = f"w^{k}"
        elif exponent == OMEGA:
            base = "w^w"
        else:
            base = f"w^({format_ordinal(exponent)})"
        parts.append(base if coeff == 1 else f"{base}*{coeff}")
    return " + ".join(parts)
