"""Norms, quasi-orders and bounded enumeration for nwqo expressions.

This module implements the semantics of an nwqo expression: which
elements belong to it, how large they are, how they compare, and the
finite set of elements below a given norm.
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

import structlog

from badseq_cli.errors import BudgetExceededError, ShapeError
from badseq_cli.models import BudgetMeter, EvalBudget
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
)

if TYPE_CHECKING:
    from collections.abc import Sequence

    from badseq_cli.nwqo.control import ControlFunction

logger = structlog.get_logger(__name__)


def check_element(expr: NwqoExpr, element: Element) -> None:
    """Check that an element belongs to an expression.

    Args:
        expr: The nwqo expression.
        element: The candidate element.

    Raises:
        ShapeError: If the element does not belong to expr.
    """
    match expr, element:
        case Gamma(p), Letter(i) if 1 <= i <= p:
            return
        case Seg(p), Number(k) if 0 <= k < p:
            return
        case Nat(), Number(k) if k >= 0:
            return
        case Sum(left, _), InLeft(value):
            check_element(left, value)
        case Sum(_, right), InRight(value):
            check_element(right, value)
        case Prod(left, right), Pair(first, second):
            check_element(left, first)
            check_element(right, second)
        case Star(arg), Word(items):
            for item in items:
                check_element(arg, item)
        case _:
            raise ShapeError(f"element {element!r} does not belong to {expr!r}")


def norm(expr: NwqoExpr, element: Element) -> int:
    """Norm of an element.

    Letters have norm 0, naturals their value, pairs the max of their
    components, and words the max of their length and their letters' norms.

    Raises:
        ShapeError: If the element does not belong to expr.
    """
    match expr, element:
        case Gamma(), Letter():
            check_element(expr, element)
            return 0
        case Seg() | Nat(), Number(k):
            check_element(expr, element)
            return k
        case Sum(left, _), InLeft(value):
            return norm(left, value)
        case Sum(_, right), InRight(value):
            return norm(right, value)
        case Prod(left, right), Pair(first, second):
            return max(norm(left, first), norm(right, second))
        case Star(arg), Word(items):
            return max([len(items), *(norm(arg, item) for item in items)])
    raise ShapeError(f"element {element!r} does not belong to {expr!r}")


def _embeds(arg: NwqoExpr, small: Sequence[Element], large: Sequence[Element]) -> bool:
    # Greedy leftmost matching decides subword embedding.
    position = 0
    for item in large:
        if position == len(small):
            break
        if leq(arg, small[position], item):
            position += 1
    return position == len(small)


def leq(expr: NwqoExpr, e1: Element, e2: Element) -> bool:
    """Quasi-order of an expression.

    Letters compare by equality, naturals numerically, sums only within a
    side, products componentwise and words by subword embedding.

    Raises:
        ShapeError: If either element does not belong to expr.
    """
    match expr, e1, e2:
        case Gamma(), Letter(i), Letter(j):
            check_element(expr, e1)
            check_element(expr, e2)
            return i == j
        case Seg() | Nat(), Number(a), Number(b):
            check_element(expr, e1)
            check_element(expr, e2)
            return a <= b
        case Sum(left, _), InLeft(a), InLeft(b):
            return leq(left, a, b)
        case Sum(_, right), InRight(a), InRight(b):
            return leq(right, a, b)
        case Sum(left, right), InLeft(a), InRight(b):
            check_element(left, a)
            check_element(right, b)
            return False
        case Sum(left, right), InRight(a), InLeft(b):
            check_element(right, a)
            check_element(left, b)
            return False
        case Prod(left, right), Pair(a1, a2), Pair(b1, b2):
            return leq(left, a1, b1) and leq(right, a2, b2)
        case Star(arg), Word(small), Word(large):
            return len(small) <= len(large) and _embeds(arg, small, large)
    raise ShapeError(f"elements {e1!r}, {e2!r} do not belong to {expr!r}")


def count_below(expr: NwqoExpr, n: int) -> int:
    """Exact cardinality of the elements of norm < n."""
    if n <= 0:
        return 0
    match expr:
        case Gamma(p):
            return p
        case Seg(p):
            return min(n, p)
        case Nat():
            return n
        case Sum(left, right):
            return count_below(left, n) + count_below(right, n)
        case Prod(left, right):
            return count_below(left, n) * count_below(right, n)
        case Star(arg):
            k = count_below(arg, n)
            return sum(k**length for length in range(n))
    raise TypeError(f"unknown nwqo expression {expr!r}")


def _enumerate(expr: NwqoExpr, n: int) -> list[Element]:
    if n <= 0:
        return []
    match expr:
        case Gamma(p):
            return [Letter(i) for i in range(1, p + 1)]
        case Seg(p):
            return [Number(k) for k in range(min(n, p))]
        case Nat():
            return [Number(k) for k in range(n)]
        case Sum(left, right):
            return [InLeft(e) for e in _enumerate(left, n)] + [
                InRight(e) for e in _enumerate(right, n)
            ]
        case Prod(left, right):
            rights = _enumerate(right, n)
            return [Pair(a, b) for a in _enumerate(left, n) for b in rights]
        case Star(arg):
            items = _enumerate(arg, n)
            return [
                Word(word)
                for length in range(n)
                for word in itertools.product(items, repeat=length)
            ]
    raise TypeError(f"unknown nwqo expression {expr!r}")


def enumerate_below(
    expr: NwqoExpr, n: int, budget: EvalBudget | None = None
) -> list[Element]:
    """List every element of norm < n, without duplicates, in a fixed order.

    Args:
        expr: The nwqo expression.
        n: Strict norm bound.
        budget: Ceilings; the element count is checked against max_nodes.

    Returns:
        The elements.

    Raises:
        BudgetExceededError: If there are more than max_nodes elements.
    """
    budget = budget or EvalBudget()
    size = count_below(expr, n)
    if size > budget.max_nodes:
        logger.warning("Enumeration refused", n=n, size=size, ceiling="max_nodes")
        raise BudgetExceededError("max_nodes", budget.max_nodes, size, {"norm_bound": n})
    return _enumerate(expr, n)


def is_bad(expr: NwqoExpr, seq: Sequence[Element]) -> bool:
    """Whether no earlier element is below a later one."""
    return not any(
        leq(expr, seq[i], seq[j]) for j in range(len(seq)) for i in range(j)
    )


def is_controlled(
    expr: NwqoExpr,
    g: ControlFunction,
    n: int,
    seq: Sequence[Element],
    meter: BudgetMeter | None = None,
) -> bool:
    """Whether |seq[i]| < g^i(n) for every position i."""
    meter = meter or BudgetMeter(EvalBudget())
    bound = n
    for i, element in enumerate(seq):
        if i:
            bound = g(bound, meter)
        if norm(expr, element) >= bound:
            return False
    return True
