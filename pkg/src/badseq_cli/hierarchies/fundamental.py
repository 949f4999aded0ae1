"""Fundamental sequences, predecessors and the pointwise ordering.

All functions work on ordinal terms as written, not only on CNF terms:
the hierarchies built on them depend on notation, so 1 + ω and ω are
treated differently even though they denote the same ordinal.
"""

from __future__ import annotations

import structlog

from badseq_cli.errors import PreconditionError
from badseq_cli.models import BudgetMeter, EvalBudget, FundamentalConfig, Trichotomy
from badseq_cli.ordinals.sampling import lean_terms_below_omega_omega
from badseq_cli.ordinals.terms import (
    OrdinalTerm,
    classify,
    compare,
    format_ordinal,
    is_cnf,
    leanness,
    make_term,
    to_cnf,
)

logger = structlog.get_logger(__name__)


def decrement(alpha: OrdinalTerm) -> OrdinalTerm:
    """The term β of a successor term α = β + 1.

    Raises:
        PreconditionError: If alpha is not a successor.
    """
    if classify(alpha) != Trichotomy.SUCCESSOR:
        raise PreconditionError(f"{format_ordinal(alpha)} is not a successor")
    exponent, coeff = alpha.summands[-1]
    return make_term((*alpha.summands[:-1], (exponent, coeff - 1)))


def fundamental(limit: OrdinalTerm, x: int, config: FundamentalConfig) -> OrdinalTerm:
    """The x-th element λ_x of the fundamental sequence of a limit term.

    (γ + ω^(β+1))_x = γ + ω^β·ω_x and (γ + ω^λ)_x = γ + ω^(λ_x).

    Args:
        limit: A limit term.
        x: Index into the sequence.
        config: Fundamental-sequence configuration giving ω_x.

    Returns:
        λ_x, a term strictly below λ.

    Raises:
        PreconditionError: If the term is not a limit.
    """
    if classify(limit) != Trichotomy.LIMIT:
        raise PreconditionError(f"{format_ordinal(limit)} is not a limit")
    exponent, coeff = limit.summands[-1]
    prefix = (*limit.summands[:-1], (exponent, coeff - 1))
    if classify(exponent) == Trichotomy.SUCCESSOR:
        tail = (decrement(exponent), config.omega(x))
    else:
        tail = (fundamental(exponent, x, config), 1)
    return make_term((*prefix, tail))


def _step(alpha: OrdinalTerm, x: int, config: FundamentalConfig) -> OrdinalTerm:
    """One step of the x-descent: β for β + 1, λ_x for a limit λ."""
    if classify(alpha) == Trichotomy.SUCCESSOR:
        return decrement(alpha)
    return fundamental(alpha, x, config)


def predecessor(alpha: OrdinalTerm, x: int, config: FundamentalConfig) -> OrdinalTerm:
    """The x-predecessor: P_x(α+1) = α and P_x(λ) = P_x(λ_x).

    Raises:
        PreconditionError: If alpha is 0, or the descent reaches 0
            through a limit (possible when ω_x = 0).
    """
    current = alpha
    while classify(current) == Trichotomy.LIMIT:
        current = fundamental(current, x, config)
    if current.is_zero:
        raise PreconditionError(
            f"no {x}-predecessor of {format_ordinal(alpha)}: descent reaches 0"
        )
    return decrement(current)


def pointwise_le(
    smaller: OrdinalTerm,
    larger: OrdinalTerm,
    x: int,
    config: FundamentalConfig,
    budget: EvalBudget | None = None,
) -> bool:
    """Pointwise ordering α' ⊴_x α: α' is reached by the x-descent from α.

    Args:
        smaller: The candidate α'.
        larger: The term α the descent starts from.
        x: Descent argument.
        config: Fundamental-sequence configuration.
        budget: Ceiling on descent steps.

    Returns:
        Whether α' = α or the descent from α passes through α'.

    Raises:
        BudgetExceededError: If the descent is longer than max_steps.
    """
    meter = BudgetMeter(budget or EvalBudget())
    target = to_cnf(smaller)
    current = larger
    while True:
        if current == smaller:
            return True
        # The descent only decreases, so it can stop once it is not above α'.
        if current.is_zero or compare(to_cnf(current), target) <= 0:
            return False
        meter.charge_step()
        current = _step(current, x, config)


def strict_pointwise_lt(
    smaller: OrdinalTerm,
    larger: OrdinalTerm,
    x: int,
    config: FundamentalConfig,
    budget: EvalBudget | None = None,
) -> bool:
    """Strict pointwise ordering α' ⊲_x α: α' ⊴_x α and α' ≠ α."""
    return smaller != larger and pointwise_le(smaller, larger, x, config, budget)


def lean_bracket(alpha: OrdinalTerm, x: int) -> OrdinalTerm:
    """Compute [α]_x = max{α' < α : N(α') ≤ N(α)·x} by exhaustive search.

    Args:
        alpha: CNF term below ω^ω, not 0.
        x: Scaling argument.

    Returns:
        The largest α' below α with leanness at most N(α)·x.

    Raises:
        PreconditionError: If alpha is 0, not CNF, or not below ω^ω.
    """
    if alpha.is_zero or not is_cnf(alpha) or any(e.as_natural() is None for e, _ in alpha.summands):
        raise PreconditionError(f"{format_ordinal(alpha)} must be a nonzero CNF term below w^w")
    bound = leanness(alpha) * x
    degree = alpha.summands[0][0].as_natural() or 0
    best: OrdinalTerm | None = None
    for candidate in lean_terms_below_omega_omega(degree, bound):
        if leanness(candidate) > bound or compare(candidate, alpha) >= 0:
            continue
        if best is None or compare(candidate, best) > 0:
            best = candidate
    if best is None:
        raise PreconditionError(f"nothing below {format_ordinal(alpha)} is {bound}-lean")
    return best
