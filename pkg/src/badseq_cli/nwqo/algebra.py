"""Isomorphisms and residual reflections of nwqo expressions.

`normalize` rewrites an expression into a canonical sum of monomials
Γ_c × X_1 × … × X_k using isomorphisms that preserve norms and orders
(units, absorption, distributivity, commutativity and associativity),
so bad sequence lengths are unchanged. `reflect_residual` maps the
residual A/x to an expression it reflects into, which can only make
maximal bad sequences longer.
"""

from __future__ import annotations

from collections import Counter
from typing import TYPE_CHECKING

import structlog

from badseq_cli.errors import ShapeError, UnsupportedReflectionError
from badseq_cli.nwqo.expr import (
    ONE_NWQO,
    ZERO_NWQO,
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
    power,
    product_of,
    sum_of,
)
from badseq_cli.nwqo.order import check_element

if TYPE_CHECKING:
    from collections.abc import Iterable

logger = structlog.get_logger(__name__)

# A monomial is the sorted tuple of its non-constant factors; the
# polynomial maps each monomial to its Γ coefficient.
Monomial = tuple[NwqoExpr, ...]
Polynomial = Counter[Monomial]


def _atom_key(atom: NwqoExpr) -> tuple[int, int, str]:
    match atom:
        case Star(Gamma(p)):
            return (1, p, "")
    return (0, 0, repr(atom))


def _monomial(factors: Iterable[NwqoExpr]) -> Monomial:
    return tuple(sorted(factors, key=_atom_key, reverse=True))


def _multiply(left: Polynomial, right: Polynomial) -> Polynomial:
    product: Polynomial = Counter()
    for ma, ca in left.items():
        for mb, cb in right.items():
            product[_monomial(ma + mb)] += ca * cb
    return product


def _polynomial(expr: NwqoExpr) -> Polynomial:
    match expr:
        case Gamma(p) | Seg(p) if p <= 1:
            return Counter({(): p}) if p else Counter()
        case Gamma(p):
            return Counter({(): p})
        case Seg(_):
            return Counter({(expr,): 1})
        case Nat():
            return Counter({(Star(ONE_NWQO),): 1})
        case Sum(left, right):
            return _polynomial(left) + _polynomial(right)
        case Prod(left, right):
            return _multiply(_polynomial(left), _polynomial(right))
        case Star(arg):
            inner = _rebuild(_polynomial(arg))
            if inner == ZERO_NWQO:
                return Counter({(): 1})
            return Counter({(Star(inner),): 1})
    raise TypeError(f"unknown nwqo expression {expr!r}")


def _rebuild(poly: Polynomial) -> NwqoExpr:
    parts: list[NwqoExpr] = []
    for monomial in sorted(poly, key=lambda m: [_atom_key(a) for a in m], reverse=True):
        coeff = poly[monomial]
        factors: list[NwqoExpr] = list(monomial)
        if coeff != 1 or not factors:
            factors.insert(0, Gamma(coeff))
        parts.append(product_of(factors))
    return sum_of(parts)


def normalize(expr: NwqoExpr) -> NwqoExpr:
    """Rewrite an expression into its canonical isomorphic form.

    ℕ becomes Γ_1*, [0] and [1] become Γ_0 and Γ_1, Γ_0* becomes Γ_1,
    units and zeros are absorbed, products distribute over sums, and
    equal monomials are merged with their Γ coefficients added. For
    exponential inputs the result is a sum of products Γ_c × Γ_{p1}* × …

    Args:
        expr: Any nwqo expression.

    Returns:
        An isomorphic expression; equal for isomorphic exponential inputs.
    """
    return _rebuild(_polynomial(expr))


def reflect_residual(expr: NwqoExpr, element: Element) -> NwqoExpr:
    """Build an expression the residual expr/element reflects into.

    Args:
        expr: The nwqo A.
        element: An element x of A.

    Returns:
        B with A/x reflecting into B, so L_{A/x} ≤ L_B pointwise.

    Raises:
        ShapeError: If element does not belong to expr.
        UnsupportedReflectionError: For words over expressions containing [p].
    """
    check_element(expr, element)
    match expr, element:
        case Gamma(p), Letter():
            return Gamma(p - 1)
        case Seg() | Nat(), Number(k):
            return Seg(k)
        case Sum(left, right), InLeft(value):
            return Sum(reflect_residual(left, value), right)
        case Sum(left, right), InRight(value):
            return Sum(left, reflect_residual(right, value))
        case Prod(left, right), Pair(first, second):
            return Sum(
                Prod(reflect_residual(left, first), right),
                Prod(left, reflect_residual(right, second)),
            )
        case Star(arg), Word(items):
            return _reflect_word(arg, items)
    raise ShapeError(f"element {element!r} does not belong to {expr!r}")


def _contains_segment(expr: NwqoExpr) -> bool:
    match expr:
        case Seg():
            return True
        case Sum(left, right) | Prod(left, right):
            return _contains_segment(left) or _contains_segment(right)
        case Star(arg):
            return _contains_segment(arg)
    return False


def _reflect_word(arg: NwqoExpr, items: tuple[Element, ...]) -> NwqoExpr:
    n = len(items)
    if n == 0:
        return ZERO_NWQO
    match arg:
        case Gamma(p) if p >= 1:
            # Γ_{p+1}*/(x1…xn) ↪ Γ_n × (Γ_p*)^n
            return Prod(Gamma(n), power(Star(Gamma(p - 1)), n))
    if _contains_segment(arg):
        logger.debug("Reflection refused", reason="segment under star")
        raise UnsupportedReflectionError(
            "no reflection for residuals of words over expressions containing [p]"
        )
    # A*/(x1…xn) ↪ Γ_n × A^n × Π (A/x_i)*
    residual_stars = [Star(reflect_residual(arg, item)) for item in items]
    return product_of([Gamma(n), power(arg, n), *residual_stars])
