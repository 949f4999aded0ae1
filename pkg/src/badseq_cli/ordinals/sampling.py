"""Deterministic generators of CNF terms for verification runs."""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING

from badseq_cli.ordinals.terms import OrdinalTerm, cnf_key, make_term, nat

if TYPE_CHECKING:
    import random
    from collections.abc import Iterator, Sequence


def from_polynomial(coeffs: Sequence[int]) -> OrdinalTerm:
    """Build ω^d·c_d + … + ω·c_1 + c_0 from coefficients, highest degree first."""
    degree = len(coeffs) - 1
    return make_term((nat(degree - i), c) for i, c in enumerate(coeffs))


def random_cnf(rng: random.Random, depth: int, max_coeff: int, max_terms: int) -> OrdinalTerm:
    """Sample a CNF term with bounded nesting depth, coefficients and width.

    Args:
        rng: Seeded random source.
        depth: Maximum exponent nesting; depth 0 yields naturals.
        max_coeff: Largest coefficient.
        max_terms: Largest number of summands.

    Returns:
        A term in CNF.
    """
    if depth == 0:
        return nat(rng.randint(0, max_coeff))
    exponents = {random_cnf(rng, depth - 1, max_coeff, max_terms) for _ in range(rng.randint(0, max_terms))}
    ordered = sorted(exponents, key=cnf_key, reverse=True)
    return make_term((e, rng.randint(1, max_coeff)) for e in ordered)


def random_fragment(
    rng: random.Random, max_degree: int, max_coeff: int, max_terms: int
) -> OrdinalTerm:
    """Sample a CNF term below ω^(ω^ω): every exponent is a polynomial in ω."""
    exponents = {
        from_polynomial([rng.randint(0, max_coeff) for _ in range(rng.randint(1, max_degree + 1))])
        for _ in range(rng.randint(0, max_terms))
    }
    ordered = sorted(exponents, key=cnf_key, reverse=True)
    return make_term((e, rng.randint(1, max_coeff)) for e in ordered)


def lean_terms_below_omega_omega(max_degree: int, max_coeff: int) -> Iterator[OrdinalTerm]:
    """Enumerate every CNF term below ω^ω of degree ≤ max_degree and coefficients ≤ max_coeff.

    With max_degree ≤ max_coeff these are exactly the max_coeff-lean terms of that degree.
    """
    for coeffs in itertools.product(range(max_coeff + 1), repeat=max_degree + 1):
        yield from_polynomial(coeffs)
