"""Maximal order types of exponential nwqos and their canonical inverses.

Exponential nwqos are built from Γ_p, ℕ, sums, products and stars of
finite alphabets. Their maximal order types are exactly the ordinals
below ω^(ω^ω), and `canonical_nwqo` picks one nwqo per such ordinal.
"""

from __future__ import annotations

from badseq_cli.errors import NonExponentialError, OutOfFragmentError
from badseq_cli.nwqo.algebra import normalize
from badseq_cli.nwqo.expr import Gamma, NwqoExpr, Prod, Star, Sum, product_of, sum_of
from badseq_cli.nwqo.syntax import format_nwqo
from badseq_cli.ordinals.terms import (
    ZERO,
    OrdinalTerm,
    format_ordinal,
    is_cnf,
    nat,
    natural_sum,
    omega_power,
)


def _flatten(expr: NwqoExpr, kind: type[Sum] | type[Prod]) -> list[NwqoExpr]:
    if isinstance(expr, kind):
        return _flatten(expr.left, kind) + _flatten(expr.right, kind)
    return [expr]


def otype(expr: NwqoExpr) -> OrdinalTerm:
    """Maximal order type of an exponential nwqo, in CNF.

    o(Γ_p) = p, o(Γ_p*) = ω^(ω^(p-1)), and sums and products map to
    natural sums and products.

    Args:
        expr: The nwqo.

    Returns:
        The order type.

    Raises:
        NonExponentialError: If a subterm such as [p] or a star of a
            non-alphabet survives normalization.
    """
    total = ZERO
    for monomial in _flatten(normalize(expr), Sum):
        coeff = 1
        exponent = ZERO
        for factor in _flatten(monomial, Prod):
            match factor:
                case Gamma(c):
                    coeff *= c
                case Star(Gamma(p)) if p >= 1:
                    exponent = natural_sum(exponent, omega_power(nat(p - 1)))
                case _:
                    raise NonExponentialError(format_nwqo(factor))
        total = natural_sum(total, omega_power(exponent, coeff))
    return total


def is_exponential(expr: NwqoExpr) -> bool:
    """Whether expr is isomorphic to an exponential nwqo."""
    try:
        otype(expr)
    except NonExponentialError:
        return False
    return True


def _fragment_exponents(alpha: OrdinalTerm) -> list[tuple[list[int], int]]:
    if not is_cnf(alpha):
        raise OutOfFragmentError(f"{format_ordinal(alpha)} is not in Cantor normal form")
    summands: list[tuple[list[int], int]] = []
    for beta, coeff in alpha.summands:
        degrees: list[int] = []
        for p, k in beta.summands:
            degree = p.as_natural()
            if degree is None:
                raise OutOfFragmentError(
                    f"{format_ordinal(alpha)} is not below w^(w^w): exponent {format_ordinal(beta)}"
                )
            degrees.extend([degree] * k)
        summands.append((degrees, coeff))
    return summands


def canonical_nwqo(alpha: OrdinalTerm) -> NwqoExpr:
    """Canonical exponential nwqo of order type alpha.

    ω^(ω^p1 + … + ω^pk)·c maps to Γ_c × Γ_{p1+1}* × … × Γ_{pk+1}*, and
    sums map to sums, followed by normalization.

    Args:
        alpha: A CNF ordinal below ω^(ω^ω).

    Returns:
        An nwqo with otype equal to alpha.

    Raises:
        OutOfFragmentError: If alpha is not in CNF or not below ω^(ω^ω).
    """
    parts: list[NwqoExpr] = []
    for degrees, coeff in _fragment_exponents(alpha):
        parts.append(product_of([Gamma(coeff), *(Star(Gamma(p + 1)) for p in degrees)]))
    return normalize(sum_of(parts))
