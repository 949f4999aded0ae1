"""Ordinal-indexed hierarchies and the bounds derived from them."""

from badseq_cli.hierarchies.bounds import (
    classify_complexity,
    hardy_instance_degree,
    leading_exponent,
    length_bound,
)
from badseq_cli.hierarchies.evaluate import HierarchyEvaluator, evaluate
from badseq_cli.hierarchies.fundamental import (
    decrement,
    fundamental,
    lean_bracket,
    pointwise_le,
    predecessor,
    strict_pointwise_lt,
)

__all__ = [
    "HierarchyEvaluator",
    "classify_complexity",
    "decrement",
    "evaluate",
    "fundamental",
    "hardy_instance_degree",
    "lean_bracket",
    "leading_exponent",
    "length_bound",
    "pointwise_le",
    "predecessor",
    "strict_pointwise_lt",
]
