"""Evaluation of the Hardy, length and fast-growing hierarchies.

Given an inflationary h, the hierarchies are defined by

    h^0(x) = x,        h^(α+1)(x) = h^α(h(x)),        h^λ(x) = h^(λ_x)(x)
    h_0(x) = 0,        h_(α+1)(x) = 1 + h_α(h(x)),    h_λ(x) = h_(λ_x)(x)
    f_0(x) = h(x),     f_(α+1)(x) = f_α^(ω_x)(x),     f_λ(x) = f_(λ_x)(x)

Every step and every natural produced is charged against the budget.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import structlog

from badseq_cli.errors import BudgetExceededError
from badseq_cli.hierarchies.fundamental import decrement, fundamental
from badseq_cli.models import BudgetMeter, EvalBudget, FundamentalConfig, HierarchyKind, Trichotomy
from badseq_cli.ordinals.terms import OrdinalTerm, classify, format_ordinal

if TYPE_CHECKING:
    from badseq_cli.nwqo.control import ControlFunction

logger = structlog.get_logger(__name__)


class HierarchyEvaluator:
    """Evaluates one hierarchy for a fixed h, configuration and budget.

    Attributes:
        h: The base function.
        config: Fundamental-sequence configuration.
        meter: Step and bit consumption, shared by all calls on this instance.
    """

    def __init__(
        self,
        h: ControlFunction,
        config: FundamentalConfig,
        budget: EvalBudget | None = None,
    ) -> None:
        self.h = h
        self.config = config
        self.meter = BudgetMeter(budget or EvalBudget())

    def _tick(self, alpha: OrdinalTerm, depth: int = 0) -> None:
        self.meter.progress.update(alpha=format_ordinal(alpha), depth=depth)
        self.meter.charge_step()

    def hardy(self, alpha: OrdinalTerm, x: int) -> int:
        """Compute h^α(x)."""
        while not alpha.is_zero:
            self._tick(alpha)
            if classify(alpha) == Trichotomy.SUCCESSOR:
                x = self.h(x, self.meter)
                alpha = decrement(alpha)
            else:
                alpha = fundamental(alpha, x, self.config)
        return x

    def length(self, alpha: OrdinalTerm, x: int) -> int:
        """Compute h_α(x), the number of successor steps of the descent."""
        steps = 0
        while not alpha.is_zero:
            self._tick(alpha)
            if classify(alpha) == Trichotomy.SUCCESSOR:
                x = self.h(x, self.meter)
                alpha = decrement(alpha)
                steps += 1
            else:
                alpha = fundamental(alpha, x, self.config)
        return steps

    def fast(self, alpha: OrdinalTerm, x: int, depth: int = 0) -> int:
        """Compute f_α(x)."""
        while classify(alpha) == Trichotomy.LIMIT:
            self._tick(alpha, depth)
            alpha = fundamental(alpha, x, self.config)
        self._tick(alpha, depth)
        if alpha.is_zero:
            return self.h(x, self.meter)
        beta = decrement(alpha)
        for _ in range(self.config.omega(x)):
            x = self.fast(beta, x, depth + 1)
        return x

    def __call__(self, kind: HierarchyKind, alpha: OrdinalTerm, x: int) -> int:
        """Dispatch on the hierarchy kind.

        Raises:
            BudgetExceededError: If steps or bits run out, with the term and
                depth reached in its progress.
        """
        try:
            match kind:
                case HierarchyKind.HARDY:
                    return self.hardy(alpha, x)
                case HierarchyKind.LENGTH:
                    return self.length(alpha, x)
                case HierarchyKind.FAST:
                    return self.fast(alpha, x)
        except RecursionError:
            raise BudgetExceededError(
                "max_steps", self.meter.budget.max_steps, self.meter.steps, self.meter.progress
            ) from None
        raise ValueError(f"unknown hierarchy {kind!r}")


def evaluate(
    kind: HierarchyKind,
    h: ControlFunction,
    alpha: OrdinalTerm,
    x: int,
    config: FundamentalConfig,
    budget: EvalBudget | None = None,
) -> int:
    """Evaluate a hierarchy at α and x.

    Args:
        kind: Hardy, length or fast-growing.
        h: Base function (strictly increasing, inflationary).
        alpha: Index term; need not be in CNF.
        x: Argument.
        config: Fundamental-sequence configuration.
        budget: Step and bit ceilings.

    Returns:
        The value.

    Raises:
        BudgetExceededError: If a ceiling is hit.
    """
    evaluator = HierarchyEvaluator(h, config, budget)
    try:
        value = evaluator(kind, alpha, x)
    except BudgetExceededError as exc:
        logger.warning("Hierarchy evaluation refused", kind=kind.value, ceiling=exc.ceiling)
        raise
    logger.debug("Hierarchy evaluated", kind=kind.value, steps=evaluator.meter.steps)
    return value
