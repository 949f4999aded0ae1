"""Derivatives of ordinals below ω^(ω^ω) and the descent bound M_α.

The n-th derivatives of α over-approximate the order types of all
residuals A/x with |x| < n, for any exponential nwqo A of order type
α. Following derivatives while the control function grows the norm
bound gives M_α(n), an upper bound on L_A(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import structlog

from badseq_cli.errors import OutOfFragmentError, PreconditionError
from badseq_cli.models import BudgetMeter, EvalBudget
from badseq_cli.ordinals.terms import (
    ZERO,
    OrdinalTerm,
    cnf_key,
    format_ordinal,
    is_cnf,
    make_term,
    nat,
    natural_product,
    natural_sum,
    omega_power,
)

if TYPE_CHECKING:
    from collections.abc import Iterator

    from badseq_cli.nwqo.control import ControlFunction

logger = structlog.get_logger(__name__)


def _degrees(beta: OrdinalTerm) -> list[tuple[int, int]]:
    """Split β = Σ ω^p·k < ω^ω into (p, k) pairs."""
    if not is_cnf(beta):
        raise OutOfFragmentError(f"exponent {format_ordinal(beta)} is not in Cantor normal form")
    pairs: list[tuple[int, int]] = []
    for exponent, coeff in beta.summands:
        degree = exponent.as_natural()
        if degree is None:
            raise OutOfFragmentError(f"exponent {format_ordinal(beta)} is not below w^w")
        pairs.append((degree, coeff))
    return pairs


def _check_fragment(alpha: OrdinalTerm) -> None:
    if not is_cnf(alpha):
        raise OutOfFragmentError(f"{format_ordinal(alpha)} is not in Cantor normal form")
    for beta, _ in alpha.summands:
        _degrees(beta)


def _polynomial(pairs: list[tuple[int, int]]) -> OrdinalTerm:
    return make_term((nat(p), k) for p, k in pairs)


def _principal_derivative(p: int, n: int) -> OrdinalTerm:
    # Dₙ(ω^(ω^0)) = n-1 and Dₙ(ω^(ω^p)) = ω^(ω^(p-1)·(n-1))·(n-1).
    if p == 0:
        return nat(n - 1)
    return omega_power(omega_power(nat(p - 1), n - 1), n - 1)


def d_n_principal(beta: OrdinalTerm, n: int) -> OrdinalTerm:
    """Compute Dₙ(ω^β) for β < ω^ω.

    Writing β = ω^p1 + … + ω^pk with repetitions,
    Dₙ(ω^β) = ⊕_j Dₙ(ω^(ω^pj)) ⊗ ⊗_{l≠j} ω^(ω^pl).

    Args:
        beta: CNF exponent below ω^ω.
        n: Norm bound, at least 1.

    Returns:
        The derivative, in CNF.

    Raises:
        OutOfFragmentError: If beta is not a CNF term below ω^ω.
        PreconditionError: If n < 1.
    """
    if n < 1:
        raise PreconditionError(f"derivatives need n >= 1, got {n}")
    pairs = _degrees(beta)
    total = ZERO
    for index, (p, k) in enumerate(pairs):
        rest = list(pairs)
        rest[index] = (p, k - 1)
        others = omega_power(_polynomial(rest))
        term = natural_product(_principal_derivative(p, n), others)
        total = natural_sum(total, natural_product(term, nat(k)))
    return total


def d_n_closed_form(beta: OrdinalTerm, n: int) -> OrdinalTerm:
    """Compute Dₙ(ω^β) from the coefficient expansion of β.

    For β = Σ_i ω^pi·ci, Dₙ(ω^β) = ⊕_i ω^βi·ci(n-1) where
    βi = ω^pi·(ci-1) ⊕ ω^(pi-1)·(n-1) ⊕ ⊕_{l≠i} ω^pl·cl, the middle
    summand being dropped when pi = 0.

    Raises:
        OutOfFragmentError: If beta is not a CNF term below ω^ω.
        PreconditionError: If n < 1.
    """
    if n < 1:
        raise PreconditionError(f"derivatives need n >= 1, got {n}")
    pairs = _degrees(beta)
    total = ZERO
    for index, (p, c) in enumerate(pairs):
        rest = list(pairs)
        rest[index] = (p, c - 1)
        exponent = _polynomial(rest)
        if p > 0:
            exponent = natural_sum(exponent, omega_power(nat(p - 1), n - 1))
        total = natural_sum(total, omega_power(exponent, c * (n - 1)))
    return total


@dataclass(frozen=True, slots=True)
class DerivativeSet:
    """Deduplicated set ∂ₙα, listed from largest to smallest."""

    members: tuple[OrdinalTerm, ...]

    def __iter__(self) -> Iterator[OrdinalTerm]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members


def derive(alpha: OrdinalTerm, n: int) -> DerivativeSet:
    """Compute the n-th derivatives ∂ₙα.

    For α = Σ_i ω^βi, each derivative replaces one summand ω^βi by
    Dₙ(ω^βi) and keeps the others, combined with natural sum.

    Args:
        alpha: CNF ordinal below ω^(ω^ω).
        n: Norm bound, at least 1.

    Returns:
        The derivatives; empty when alpha is 0.

    Raises:
        OutOfFragmentError: If alpha is outside the fragment.
        PreconditionError: If n < 1.
    """
    if n < 1:
        raise PreconditionError(f"derivatives need n >= 1, got {n}")
    _check_fragment(alpha)
    found: set[OrdinalTerm] = set()
    for index, (beta, coeff) in enumerate(alpha.summands):
        rest = list(alpha.summands)
        rest[index] = (beta, coeff - 1)
        found.add(natural_sum(d_n_principal(beta, n), make_term(rest)))
    return DerivativeSet(tuple(sorted(found, key=cnf_key, reverse=True)))


class DescentBound:
    """Memoized evaluator of M_α(n) = max over α' in ∂ₙα of 1 + M_α'(g(n)).

    One instance is one computation: memo table and budget meter are shared
    across all sub-calls.
    """

    def __init__(self, g: ControlFunction, budget: EvalBudget | None = None) -> None:
        self.g = g
        self.meter = BudgetMeter(budget or EvalBudget())
        self.memo: dict[tuple[OrdinalTerm, int], int] = {}

    def __call__(self, alpha: OrdinalTerm, n: int) -> int:
        """Evaluate M_α(n).

        Raises:
            OutOfFragmentError: If alpha is outside the fragment.
            BudgetExceededError: If nodes, steps or bits run out.
        """
        _check_fragment(alpha)
        if n < 0:
            raise PreconditionError(f"n must be >= 0, got {n}")
        stack: list[tuple[OrdinalTerm, int]] = [(alpha, n)]
        expanded: dict[tuple[OrdinalTerm, int], list[tuple[OrdinalTerm, int]]] = {}
        while stack:
            key = stack[-1]
            if key in self.memo:
                stack.pop()
                continue
            current, bound = key
            if current.is_zero or bound == 0:
                self.memo[key] = 0
                stack.pop()
                continue
            children = expanded.get(key)
            if children is None:
                self.meter.charge_node()
                self.meter.progress.update(term=format_ordinal(current), n=bound, depth=len(stack))
                following = self.g(bound, self.meter)
                children = [(child, following) for child in derive(current, bound)]
                expanded[key] = children
            pending = [child for child in children if child not in self.memo]
            if pending:
                stack.extend(pending)
                continue
            self.memo[key] = max(1 + self.memo[child] for child in children)
            del expanded[key]
            stack.pop()
        return self.memo[(alpha, n)]


def mbound(
    alpha: OrdinalTerm,
    g: ControlFunction,
    n: int,
    budget: EvalBudget | None = None,
) -> int:
    """Compute the descent bound M_α(n), with M_0 = 0 and M_α(0) = 0.

    Args:
        alpha: CNF ordinal below ω^(ω^ω).
        g: Control function.
        n: Norm bound.
        budget: Ceilings; memoization is per call.

    Returns:
        M_α(n).

    Raises:
        OutOfFragmentError: If alpha is outside the fragment.
        BudgetExceededError: If a ceiling is hit.
    """
    value = DescentBound(g, budget)(alpha, n)
    logger.debug("Descent bound computed", alpha=format_ordinal(alpha), n=n, value=value)
    return value
