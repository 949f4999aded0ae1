"""Exhaustive search for the longest controlled bad sequence.

The search explores every sequence x_0, x_1, … with |x_i| < g^i(n) in
which no element is above an earlier one. It is the ground truth the
ordinal bounds are checked against, so it favours obvious correctness
over speed and stops as soon as the node budget runs out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import structlog

from badseq_cli.errors import PreconditionError
from badseq_cli.models import BudgetMeter, EvalBudget
from badseq_cli.nwqo.expr import Element, Gamma, Letter, NwqoExpr, Star, Word
from badseq_cli.nwqo.order import check_element, enumerate_below, leq

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from badseq_cli.nwqo.control import ControlFunction

logger = structlog.get_logger(__name__)


@dataclass(frozen=True, slots=True)
class BadLengthResult:
    """Outcome of a bad sequence search.

    Attributes:
        length: Maximal length found.
        witness: A sequence of that length.
        nodes: Search nodes visited.
    """

    length: int
    witness: tuple[Element, ...]
    nodes: int


def _letters(element: Element) -> list[int]:
    match element:
        case Letter(i):
            return [i]
        case Word(items):
            return [i for item in items for i in _letters(item)]
    return []


class _Search:
    """Depth-first search sharing one node meter and one enumeration cache.

    Every visited node and every embedding check is charged to max_nodes,
    so a refusal arrives after work proportional to the ceiling.
    """

    def __init__(
        self,
        expr: NwqoExpr,
        g: ControlFunction,
        budget: EvalBudget,
        symmetry: bool,
    ) -> None:
        self.expr = expr
        self.g = g
        self.budget = budget
        self.meter = BudgetMeter(budget)
        self.symmetry = symmetry
        self._pools: dict[int, list[Element]] = {}
        self._fresh: dict[tuple[int, int], list[Element]] = {}
        self._depth0 = 0
        if symmetry:
            match expr:
                case Gamma(p) | Star(Gamma(p)):
                    self.alphabet = p
                case _:
                    raise PreconditionError(
                        "letter-symmetry pruning requires Gamma(p) or Star(Gamma(p))"
                    )

    def pool(self, bound: int) -> list[Element]:
        if bound not in self._pools:
            self._pools[bound] = enumerate_below(self.expr, bound, self.budget)
        return self._pools[bound]

    def fresh(self, bound: int, next_bound: int) -> list[Element]:
        """Elements of norm < next_bound that have norm >= bound."""
        key = (bound, next_bound)
        if key not in self._fresh:
            known = set(self.pool(bound))
            self._fresh[key] = [e for e in self.pool(next_bound) if e not in known]
        return self._fresh[key]

    def survivors(
        self, elements: Iterable[Element], forbidden: Sequence[Element]
    ) -> list[Element]:
        """Elements above none of the forbidden ones."""
        kept: list[Element] = []
        for element in elements:
            self.meter.charge_node(len(forbidden))
            if not any(leq(self.expr, earlier, element) for earlier in forbidden):
                kept.append(element)
        return kept

    def _canonical(self, candidate: Element, forbidden: tuple[Element, ...]) -> bool:
        # Fresh letters are interchangeable; keep the candidate that uses the
        # smallest ones in order of first occurrence.
        used = {i for element in forbidden for i in _letters(element)}
        fresh = [i for i in range(1, self.alphabet + 1) if i not in used]
        seen: list[int] = []
        for i in _letters(candidate):
            if i not in used and i not in seen:
                seen.append(i)
        return seen == fresh[: len(seen)]

    def run(
        self, forbidden: tuple[Element, ...], alive: list[Element], bound: int
    ) -> tuple[int, tuple[Element, ...]]:
        # alive: the elements of norm < bound above no forbidden element.
        best: tuple[int, tuple[Element, ...]] = (0, ())
        next_bound: int | None = None
        for candidate in alive:
            if self.symmetry and not self._canonical(candidate, forbidden):
                continue
            self.meter.charge_node()
            if next_bound is None:
                next_bound = self.g(bound, self.meter)
            extended = (*forbidden, candidate)
            next_alive = self.survivors(alive, (candidate,))
            next_alive.extend(self.survivors(self.fresh(bound, next_bound), extended))
            length, tail = self.run(extended, next_alive, next_bound)
            if length + 1 > best[0]:
                best = (length + 1, (candidate, *tail))
                if len(forbidden) == self._depth0:
                    self.meter.progress["best_length"] = best[0]
        return best

    def search(self, forbidden: Sequence[Element], n: int) -> BadLengthResult:
        for element in forbidden:
            check_element(self.expr, element)
        self._depth0 = len(forbidden)
        alive = self.survivors(self.pool(n), forbidden)
        length, witness = self.run(tuple(forbidden), alive, n)
        return BadLengthResult(length=length, witness=witness, nodes=self.meter.nodes)


def max_bad_length(
    expr: NwqoExpr,
    g: ControlFunction,
    n: int,
    budget: EvalBudget | None = None,
    symmetry: bool = False,
) -> BadLengthResult:
    """Compute L_A(n), the length of the longest (g, n)-controlled bad sequence.

    Args:
        expr: The nwqo A.
        g: Control function.
        n: Initial norm bound; the i-th element has norm < g^i(n).
        budget: Ceilings for the search.
        symmetry: Prune sequences equal up to renaming unused letters
            (Gamma and Star(Gamma) only).

    Returns:
        The maximal length with a witness sequence.

    Raises:
        BudgetExceededError: If the search exceeds a ceiling.
        PreconditionError: If symmetry is requested for another shape.
    """
    log = logger.bind(n=n, control=str(g))
    search = _Search(expr, g, budget or EvalBudget(), symmetry)
    result = search.search((), n)
    log.debug("Bad sequence search finished", length=result.length, nodes=result.nodes)
    return result


def search_residual(
    expr: NwqoExpr,
    forbidden: Sequence[Element],
    g: ControlFunction,
    n: int,
    budget: EvalBudget | None = None,
) -> BadLengthResult:
    """Longest controlled bad sequence none of whose elements is above a forbidden one."""
    return _Search(expr, g, budget or EvalBudget(), symmetry=False).search(forbidden, n)


def max_bad_length_residual(
    expr: NwqoExpr,
    forbidden: Sequence[Element],
    g: ControlFunction,
    n: int,
    budget: EvalBudget | None = None,
) -> int:
    """Compute L_{A/forbidden}(n) without building the residual expression.

    Args:
        expr: The nwqo A.
        forbidden: Elements x with every sequence element required to avoid ↑x.
        g: Control function.
        n: Initial norm bound.
        budget: Ceilings for the search.

    Returns:
        The maximal length.

    Raises:
        ShapeError: If a forbidden element does not belong to expr.
        BudgetExceededError: If the search exceeds a ceiling.
    """
    return search_residual(expr, forbidden, g, n, budget).length
