"""Normed wqo expressions, their elements, and bad sequence search."""

from badseq_cli.nwqo.algebra import normalize, reflect_residual
from badseq_cli.nwqo.control import SUCC, ControlFunction, parse_control
from badseq_cli.nwqo.expr import (
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
)
from badseq_cli.nwqo.oracle import (
    BadLengthResult,
    max_bad_length,
    max_bad_length_residual,
    search_residual,
)
from badseq_cli.nwqo.order import (
    check_element,
    count_below,
    enumerate_below,
    is_bad,
    is_controlled,
    leq,
    norm,
)
from badseq_cli.nwqo.syntax import (
    format_element,
    format_nwqo,
    format_sequence,
    parse_element,
    parse_nwqo,
    parse_sequence,
)

__all__ = [
    "SUCC",
    "BadLengthResult",
    "ControlFunction",
    "Element",
    "Gamma",
    "InLeft",
    "InRight",
    "Letter",
    "Nat",
    "Number",
    "NwqoExpr",
    "Pair",
    "Prod",
    "Seg",
    "Star",
    "Sum",
    "Word",
    "check_element",
    "count_below",
    "enumerate_below",
    "format_element",
    "format_nwqo",
    "format_sequence",
    "is_bad",
    "is_controlled",
    "leq",
    "max_bad_length",
    "max_bad_length_residual",
    "norm",
    "normalize",
    "parse_control",
    "parse_element",
    "parse_nwqo",
    "parse_sequence",
    "power",
    "reflect_residual",
    "search_residual",
]
