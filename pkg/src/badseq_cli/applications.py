"""Complexity presets for lossy channel systems and the Post embedding problem.

Both problems reduce to controlled bad sequences over products of
stars of finite alphabets, so their complexity follows from the order
type of that nwqo and the level of the control function.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import structlog

from badseq_cli.derivatives import mbound
from badseq_cli.errors import BudgetExceededError, PreconditionError
from badseq_cli.hierarchies.bounds import classify_complexity, leading_exponent
from badseq_cli.models import (
    Classification,
    ComplexityBranch,
    EvalBudget,
    LcsShape,
    PresetReport,
)
from badseq_cli.nwqo.expr import Gamma, NwqoExpr, Prod, Star, power
from badseq_cli.nwqo.oracle import max_bad_length
from badseq_cli.nwqo.syntax import format_nwqo
from badseq_cli.ordinals.terms import (
    OMEGA,
    Ordering,
    OrdinalTerm,
    compare,
    format_ordinal,
    nat,
    omega_power,
)
from badseq_cli.otype import otype

if TYPE_CHECKING:
    from badseq_cli.nwqo.control import ControlFunction

logger = structlog.get_logger(__name__)

# Shapes small enough for the exact numeric comparison.
_NUMERIC_LIMIT = 2


def control_level(g: ControlFunction, gamma: OrdinalTerm | None = None) -> OrdinalTerm:
    """Level γ with g in F_γ: the explicit value if given, else inferred from g.

    Raises:
        PreconditionError: If γ cannot be inferred from g.
    """
    if gamma is not None:
        return gamma
    level = g.fast_growing_level()
    if level is None:
        raise PreconditionError(f"cannot infer the level of control {g}; pass gamma explicitly")
    return nat(level)


def _classify_preset(beta: OrdinalTerm, gamma: OrdinalTerm) -> tuple[Classification, bool]:
    # For finite exponents the bound holds at level max(γ, 2) + β.
    if compare(beta, OMEGA) == Ordering.LESS and compare(gamma, nat(2)) == Ordering.LESS:
        return classify_complexity(beta, nat(2)), True
    return classify_complexity(beta, gamma), False


def lcs_nwqo(shape: LcsShape) -> NwqoExpr:
    """Γ_q × (Γ_m*)^c: control states times one word per channel."""
    return Prod(Gamma(shape.q), power(Star(Gamma(shape.m)), shape.c))


def lcs_report(
    shape: LcsShape,
    g: ControlFunction,
    n: int | None = None,
    budget: EvalBudget | None = None,
    gamma: OrdinalTerm | None = None,
) -> PresetReport:
    """Complexity of lossy channel systems with the given shape.

    Args:
        shape: States, letters and channels.
        g: Control function of the reachability algorithm.
        n: Optional norm bound for a numeric M bound.
        budget: Ceilings for numeric values.
        gamma: Explicit control level, inferred from g when omitted.

    Returns:
        The report, at level ω^(m-1)·c.
    """
    expr = lcs_nwqo(shape)
    order_type = otype(expr)
    level = omega_power(nat(shape.m - 1), shape.c)
    classification, raised = _classify_preset(leading_exponent(order_type), control_level(g, gamma))

    numeric: dict[str, int] = {}
    exceeded: str | None = None
    if n is not None:
        try:
            numeric["mbound"] = mbound(order_type, g, n, budget)
        except BudgetExceededError as exc:
            logger.warning("LCS numeric bound refused", ceiling=exc.ceiling)
            exceeded = f"{exc.ceiling}={exc.limit}"

    return PresetReport(
        name="lcs",
        nwqo=format_nwqo(expr),
        order_type=format_ordinal(order_type),
        level=format_ordinal(level),
        classification=classification,
        gamma_raised=raised,
        numeric=numeric,
        exceeded=exceeded,
    )


def pep_nwqo(p: int, copies: int) -> NwqoExpr:
    """Γ_p* × Γ_copies: copies disjoint copies of words over p letters."""
    return Prod(Star(Gamma(p)), Gamma(copies))


def pep_report(
    p: int,
    copies: int,
    g: ControlFunction,
    size: int = 0,
    unbounded: bool = False,
    budget: EvalBudget | None = None,
    gamma: OrdinalTerm | None = None,
) -> PresetReport:
    """Complexity of the Post embedding problem.

    The length of shortest solutions is bounded by H = 2·L_{Γ_p*·copies}(size),
    at level ω^(p-1) for a p-letter alphabet and ω^ω when the alphabet is
    part of the input.

    Args:
        p: Alphabet size.
        copies: Number of copies of the word nwqo.
        g: Control function.
        size: Argument the length function is evaluated at.
        unbounded: Whether the alphabet is unbounded.
        budget: Ceilings for numeric values.
        gamma: Explicit control level, inferred from g when omitted.

    Returns:
        The report; numeric H only for p ≤ 2 and copies ≤ 2.

    Raises:
        PreconditionError: If p or copies is below 1.
    """
    if p < 1 or copies < 1:
        raise PreconditionError("alphabet size and copies must be >= 1")
    level_gamma = control_level(g, gamma)
    if unbounded:
        beta = omega_power(nat(1))
        return PresetReport(
            name="pep",
            level=format_ordinal(omega_power(beta)),
            classification=Classification(
                branch=ComplexityBranch.BETA_DOMINATES,
                index=format_ordinal(omega_power(beta)),
                beta=format_ordinal(omega_power(beta)),
                gamma=format_ordinal(level_gamma),
                note="alphabet is part of the input",
            ),
        )

    expr = pep_nwqo(p, copies)
    order_type = otype(expr)
    classification, raised = _classify_preset(leading_exponent(order_type), level_gamma)

    numeric: dict[str, int] = {}
    exceeded: str | None = None
    note: str | None = None
    if p <= _NUMERIC_LIMIT and copies <= _NUMERIC_LIMIT:
        try:
            length = max_bad_length(expr, g, size, budget).length
            numeric = {"length": length, "H": 2 * length}
            if size == 0:
                note = "size 0 admits only the empty sequence; pass a positive size"
        except BudgetExceededError as exc:
            logger.warning("PEP numeric bound refused", ceiling=exc.ceiling)
            exceeded = f"{exc.ceiling}={exc.limit}"

    return PresetReport(
        name="pep",
        nwqo=format_nwqo(expr),
        order_type=format_ordinal(order_type),
        level=format_ordinal(omega_power(nat(p - 1))),
        classification=classification,
        gamma_raised=raised,
        numeric=numeric,
        exceeded=exceeded,
        note=note,
    )
