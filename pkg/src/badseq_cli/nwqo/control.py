"""Control functions bounding the norms of controlled sequences.

A control function g is ``succ`` or an arithmetic expression in ``x``
built from naturals, ``+``, ``*`` and ``^``. Evaluation is exact and
guarded by the bit ceiling of the active budget.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import structlog

from badseq_cli.errors import BudgetExceededError, PreconditionError
from badseq_cli.models import BudgetMeter, EvalBudget
from badseq_cli.parsing import TokenStream, TokenType

logger = structlog.get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Const:
    value: int


@dataclass(frozen=True, slots=True)
class Var:
    pass


@dataclass(frozen=True, slots=True)
class Add:
    left: ControlExpr
    right: ControlExpr


@dataclass(frozen=True, slots=True)
class Mul:
    left: ControlExpr
    right: ControlExpr


@dataclass(frozen=True, slots=True)
class Pow:
    base: ControlExpr
    exponent: ControlExpr


ControlExpr = Const | Var | Add | Mul | Pow


def _evaluate(expr: ControlExpr, x: int, meter: BudgetMeter) -> int:
    match expr:
        case Const(value):
            return value
        case Var():
            return x
        case Add(left, right):
            return meter.check_bits(_evaluate(left, x, meter) + _evaluate(right, x, meter))
        case Mul(left, right):
            return meter.check_bits(_evaluate(left, x, meter) * _evaluate(right, x, meter))
        case Pow(base, exponent):
            b = _evaluate(base, x, meter)
            e = _evaluate(exponent, x, meter)
            if b > 1 and e * (b.bit_length() - 1) > meter.budget.max_bits:
                raise BudgetExceededError(
                    "max_bits", meter.budget.max_bits, e * (b.bit_length() - 1), meter.progress
                )
            return meter.check_bits(b**e)
    raise TypeError(f"unknown control expression {expr!r}")


def _format(expr: ControlExpr, parent: int = 0) -> str:
    match expr:
        case Const(value):
            return str(value)
        case Var():
            return "x"
        case Add(left, right):
            text, level = f"{_format(left, 1)} + {_format(right, 1)}", 1
        case Mul(left, right):
            text, level = f"{_format(left, 2)} * {_format(right, 2)}", 2
        case Pow(base, exponent):
            text, level = f"{_format(base, 4)}^{_format(exponent, 3)}", 3
        case _:
            raise TypeError(f"unknown control expression {expr!r}")
    return f"({text})" if level < parent else text


def _poly_mul(left: Counter[int], right: Counter[int]) -> Counter[int]:
    product: Counter[int] = Counter()
    for da, ca in left.items():
        for db, cb in right.items():
            product[da + db] += ca * cb
    return product


def _polynomial(expr: ControlExpr) -> Counter[int] | None:
    """Expand into degree -> coefficient, or None if x occurs in an exponent."""
    match expr:
        case Const(value):
            return Counter({0: value})
        case Var():
            return Counter({1: 1})
        case Add(left, right) | Mul(left, right):
            lp, rp = _polynomial(left), _polynomial(right)
            if lp is None or rp is None:
                return None
            return lp + rp if isinstance(expr, Add) else _poly_mul(lp, rp)
        case Pow(base, exponent):
            bp, ep = _polynomial(base), _polynomial(exponent)
            if bp is None or ep is None or any(d > 0 and c for d, c in ep.items()):
                return None
            result: Counter[int] = Counter({0: 1})
            for _ in range(ep[0]):
                result = _poly_mul(result, bp)
            return result
    return None


SUCC_EXPR: ControlExpr = Add(Var(), Const(1))


@dataclass(frozen=True, slots=True)
class ControlFunction:
    """A smooth control function g with g(x) ≥ x + 1.

    Attributes:
        expr: Expression tree in the variable x.
        name: Display name, ``succ`` for the successor function.
    """

    expr: ControlExpr
    name: str | None = None

    def __call__(self, x: int, meter: BudgetMeter | None = None) -> int:
        """Evaluate g(x) exactly.

        Raises:
            BudgetExceededError: If a value exceeds the bit ceiling.
        """
        return _evaluate(self.expr, x, meter or BudgetMeter(EvalBudget()))

    def iterate(self, times: int, x: int, meter: BudgetMeter | None = None) -> int:
        """Compute g^times(x)."""
        meter = meter or BudgetMeter(EvalBudget())
        for _ in range(times):
            x = self(x, meter)
        return x

    @property
    def is_successor(self) -> bool:
        """Whether g is x + 1."""
        return self.expr == SUCC_EXPR

    def fast_growing_level(self) -> int | None:
        """Smallest level γ of the fast-growing classes known to contain g.

        Returns:
            0 for x + c, 2 for other polynomials, None when undetermined.
        """
        poly = _polynomial(self.expr)
        if poly is None:
            return None
        degree = max((d for d, c in poly.items() if c), default=0)
        if degree <= 1 and poly[1] <= 1:
            return 0
        return 2

    def times_identity(self) -> ControlFunction:
        """The function x ↦ x·g(x)."""
        return ControlFunction(Mul(Var(), self.expr))

    def is_strictly_increasing_on(self, upto: int) -> bool:
        """Sampled check of g(x) < g(x + 1) for x < upto."""
        values = [self(x) for x in range(upto + 1)]
        return all(a < b for a, b in zip(values, values[1:], strict=False))

    def is_smooth_on(self, upto: int) -> bool:
        """Sampled check of g(x) ≥ x + 1 and strict monotonicity for x ≤ upto."""
        return self.is_strictly_increasing_on(upto) and all(
            self(x) >= x + 1 for x in range(upto + 1)
        )

    def __str__(self) -> str:
        return self.name or _format(self.expr)


SUCC = ControlFunction(SUCC_EXPR, "succ")


def parse_control(text: str, smooth_check_upto: int = 8) -> ControlFunction:
    """Parse a control function.

    Grammar::

        expr   := term ("+" term)*
        term   := factor ("*" factor)*
        factor := atom ("^" factor)?
        atom   := NAT | "x" | "(" expr ")"

    Args:
        text: ``succ`` or an expression in x.
        smooth_check_upto: Arguments sampled for the smoothness check.

    Returns:
        The control function.

    Raises:
        ParseError: On malformed input.
        PreconditionError: If the function is not smooth on the sample.
    """
    if text.strip() == "succ":
        return SUCC
    stream = TokenStream(text)
    expr = _expr(stream)
    stream.expect_end()
    control = ControlFunction(expr)
    if not control.is_smooth_on(smooth_check_upto):
        raise PreconditionError(
            f"control function {control} must be strictly increasing with g(x) >= x + 1"
        )
    logger.debug("Parsed control function", control=str(control))
    return control


def _expr(stream: TokenStream) -> ControlExpr:
    expr = _term(stream)
    while stream.accept("+"):
        expr = Add(expr, _term(stream))
    return expr


def _term(stream: TokenStream) -> ControlExpr:
    expr = _factor(stream)
    while stream.accept("*"):
        expr = Mul(expr, _factor(stream))
    return expr


def _factor(stream: TokenStream) -> ControlExpr:
    base = _atom(stream)
    if stream.accept("^"):
        return Pow(base, _factor(stream))
    return base


def _atom(stream: TokenStream) -> ControlExpr:
    token = stream.current
    if token.type == TokenType.NUMBER:
        return Const(stream.expect_number())
    if token.type == TokenType.IDENT and token.value == "x":
        stream.advance()
        return Var()
    if stream.accept("("):
        expr = _expr(stream)
        stream.expect(")")
        return expr
    raise stream.error("expected a number, x or '('")
