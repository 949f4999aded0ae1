"""Ordinal terms in Cantor normal form and their arithmetic."""

from badseq_cli.ordinals.syntax import parse_ordinal
from badseq_cli.ordinals.terms import (
    OMEGA,
    ONE,
    ZERO,
    Ordering,
    OrdinalTerm,
    classify,
    cnf_key,
    compare,
    format_ordinal,
    is_cnf,
    leanness,
    make_term,
    nat,
    natural_product,
    natural_sum,
    omega_power,
    syntactic_sum,
    to_cnf,
)

__all__ = [
    "OMEGA",
    "ONE",
    "ZERO",
    "Ordering",
    "OrdinalTerm",
    "classify",
    "cnf_key",
    "compare",
    "format_ordinal",
    "is_cnf",
    "leanness",
    "make_term",
    "nat",
    "natural_product",
    "natural_sum",
    "omega_power",
    "parse_ordinal",
    "syntactic_sum",
    "to_cnf",
]
