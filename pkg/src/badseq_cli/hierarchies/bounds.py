"""Length bounds and complexity classification from order types."""

from __future__ import annotations

from typing import TYPE_CHECKING

import structlog

from badseq_cli.errors import BudgetExceededError, PreconditionError
from badseq_cli.hierarchies.evaluate import HierarchyEvaluator
from badseq_cli.models import (
    Classification,
    ComplexityBranch,
    EvalBudget,
    FundamentalConfig,
    HierarchyKind,
    LengthBound,
    OmegaPreset,
)
from badseq_cli.ordinals.terms import (
    OMEGA,
    ZERO,
    Ordering,
    OrdinalTerm,
    compare,
    format_ordinal,
    is_cnf,
    leanness,
    nat,
    syntactic_sum,
)

if TYPE_CHECKING:
    from badseq_cli.nwqo.control import ControlFunction

logger = structlog.get_logger(__name__)


def hardy_instance_degree(alpha: OrdinalTerm) -> int | None:
    """Return p when alpha = ω^(ω^(p-1)), the order type of Γ_p*, else None."""
    if len(alpha.summands) != 1 or alpha.summands[0][1] != 1:
        return None
    exponent = alpha.summands[0][0]
    if len(exponent.summands) != 1 or exponent.summands[0][1] != 1:
        return None
    degree = exponent.summands[0][0].as_natural()
    return None if degree is None else degree + 1


def length_bound(
    alpha: OrdinalTerm,
    g: ControlFunction,
    n: int,
    config: FundamentalConfig,
    budget: EvalBudget | None = None,
    numeric: bool = True,
) -> LengthBound:
    """Bound L_A(n) for every exponential A of order type alpha.

    With k the leanness of alpha and h(x) = x·g(x), L_A(n) ≤ h_α(k·n)
    when ω_x = x + 1, and L_A(n) ≤ h_α(k·n + 1) when ω_x = x.

    Args:
        alpha: CNF order type.
        g: Control function.
        n: Initial norm bound.
        config: Fundamental-sequence configuration.
        budget: Ceilings for the numeric evaluation.
        numeric: Whether to evaluate h_α at the argument.

    Returns:
        The symbolic bound, with its numeric value unless skipped or a
        ceiling was hit.

    Raises:
        PreconditionError: If alpha is not in CNF.
    """
    if not is_cnf(alpha):
        raise PreconditionError(f"{format_ordinal(alpha)} is not in Cantor normal form")
    k = leanness(alpha)
    h = g.times_identity()
    argument = k * n if config.omega_at == OmegaPreset.X_PLUS_1 else k * n + 1
    text = format_ordinal(alpha)
    symbolic = f"L({n}) <= M_{{{text}}}({n}) <= h_{{{text}}}({argument}) with h(x) = {h}, k = {k}"

    hardy_instance = None
    if (p := hardy_instance_degree(alpha)) is not None:
        hardy_instance = {"p": p, "argument": (p - 1) * n}

    value: int | None = None
    exceeded: str | None = None
    if numeric:
        try:
            value = HierarchyEvaluator(h, config, budget)(HierarchyKind.LENGTH, alpha, argument)
        except BudgetExceededError as exc:
            logger.warning("Numeric length bound refused", alpha=text, ceiling=exc.ceiling)
            exceeded = f"{exc.ceiling}={exc.limit}"

    return LengthBound(
        alpha=text,
        leanness=k,
        h=str(h),
        argument=argument,
        symbolic=symbolic,
        numeric=value,
        exceeded=exceeded,
        hardy_instance=hardy_instance,
    )


def classify_complexity(beta: OrdinalTerm, gamma: OrdinalTerm) -> Classification:
    """Fast-growing class of bad sequence lengths.

    For order types below ω^(β+1) and controls in F_γ, lengths are in
    F_β when γ < ω ≤ β, and in F_{γ+β} when 2 ≤ γ < ω and β < ω.
    An infinite γ with β < ω is left unclassified.

    Args:
        beta: Exponent bound β, in CNF.
        gamma: Control level γ, in CNF.

    Returns:
        The classification, with branch OUTSIDE when neither case applies.

    Raises:
        PreconditionError: If a term is not in CNF.
    """
    beta_text, gamma_text = format_ordinal(beta), format_ordinal(gamma)
    finite_beta = compare(beta, OMEGA) == Ordering.LESS
    finite_gamma = compare(gamma, OMEGA) == Ordering.LESS
    if finite_gamma and not finite_beta:
        return Classification(
            branch=ComplexityBranch.BETA_DOMINATES,
            index=beta_text,
            beta=beta_text,
            gamma=gamma_text,
        )
    if finite_gamma and finite_beta and compare(gamma, nat(2)) != Ordering.LESS:
        return Classification(
            branch=ComplexityBranch.GAMMA_PLUS_BETA,
            index=format_ordinal(syntactic_sum(gamma, beta)),
            beta=beta_text,
            gamma=gamma_text,
        )
    return Classification(
        branch=ComplexityBranch.OUTSIDE,
        beta=beta_text,
        gamma=gamma_text,
        note="requires gamma < w <= beta, or 2 <= gamma < w and beta < w",
    )


def leading_exponent(alpha: OrdinalTerm) -> OrdinalTerm:
    """Least β with alpha < ω^(β+1): the first exponent of its CNF, 0 for 0."""
    if not is_cnf(alpha):
        raise PreconditionError(f"{format_ordinal(alpha)} is not in Cantor normal form")
    return alpha.summands[0][0] if alpha.summands else ZERO
