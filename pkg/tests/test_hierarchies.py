"""Tests for fundamental sequences and the hierarchy evaluators."""

from __future__ import annotations

import pytest

from badseq_cli.errors import BudgetExceededError, PreconditionError
from badseq_cli.hierarchies.evaluate import HierarchyEvaluator, evaluate
from badseq_cli.hierarchies.fundamental import (
    decrement,
    fundamental,
    lean_bracket,
    pointwise_le,
    predecessor,
    strict_pointwise_lt,
)
from badseq_cli.models import EvalBudget, FundamentalConfig, HierarchyKind
from badseq_cli.nwqo.control import SUCC
from badseq_cli.ordinals.syntax import parse_ordinal
from badseq_cli.ordinals.terms import OMEGA, format_ordinal, nat


def _fmt(term) -> str:
    return format_ordinal(term)


class TestFundamentalSequences:
    """Tests for λ_x and the x-descent."""

    def test_omega(self, x_plus_1: FundamentalConfig, x_only: FundamentalConfig) -> None:
        """Test ω_x under both presets."""
        assert _fmt(fundamental(OMEGA, 3, x_plus_1)) == "4"
        assert _fmt(fundamental(OMEGA, 3, x_only)) == "3"

    @pytest.mark.parametrize(
        ("alpha", "x", "expected"),
        [
            ("w^w", 2, "w^3"),
            ("w*2", 2, "w + 3"),
            ("w^2", 1, "w*2"),
            ("w^(w+1)", 1, "w^w*2"),
        ],
    )
    def test_limits(self, alpha: str, x: int, expected: str, x_plus_1: FundamentalConfig) -> None:
        """Test fundamental sequences of composite limits."""
        assert _fmt(fundamental(parse_ordinal(alpha), x, x_plus_1)) == expected

    def test_notation_sensitive(self, x_plus_1: FundamentalConfig) -> None:
        """Test that 1 + ω descends through its last summand."""
        assert _fmt(fundamental(parse_ordinal("1+w"), 2, x_plus_1)) == "4"

    def test_not_a_limit(self, x_plus_1: FundamentalConfig) -> None:
        """Test that successors have no fundamental sequence."""
        with pytest.raises(PreconditionError):
            fundamental(nat(3), 1, x_plus_1)

    def test_decrement(self) -> None:
        """Test α + 1 ↦ α."""
        assert _fmt(decrement(parse_ordinal("w+2"))) == "w + 1"
        with pytest.raises(PreconditionError):
            decrement(OMEGA)


class TestPredecessor:
    """Tests for P_x."""

    def test_omega(self, x_plus_1: FundamentalConfig, x_only: FundamentalConfig) -> None:
        """Test P_x(ω) = ω_x - 1."""
        assert _fmt(predecessor(OMEGA, 3, x_plus_1)) == "3"
        assert _fmt(predecessor(OMEGA, 3, x_only)) == "2"

    def test_successor(self, x_plus_1: FundamentalConfig) -> None:
        """Test P_x(α+1) = α."""
        assert _fmt(predecessor(parse_ordinal("w+1"), 5, x_plus_1)) == "w"

    def test_zero(self, x_plus_1: FundamentalConfig) -> None:
        """Test that 0 has no predecessor."""
        with pytest.raises(PreconditionError):
            predecessor(nat(0), 1, x_plus_1)

    def test_descent_to_zero(self, x_only: FundamentalConfig) -> None:
        """Test that ω_0 = 0 leaves ω without a 0-predecessor."""
        with pytest.raises(PreconditionError):
            predecessor(OMEGA, 0, x_only)


class TestPointwiseOrder:
    """Tests for the pointwise orderings."""

    def test_reached(self, x_plus_1: FundamentalConfig) -> None:
        """Test that the descent from ω at 3 passes through 2."""
        assert pointwise_le(nat(2), OMEGA, 3, x_plus_1)
        assert strict_pointwise_lt(nat(2), OMEGA, 3, x_plus_1)

    def test_not_reached(self, x_plus_1: FundamentalConfig) -> None:
        """Test that the descent from ω at 3 never visits 5."""
        assert not pointwise_le(nat(5), OMEGA, 3, x_plus_1)

    def test_reflexive(self, x_plus_1: FundamentalConfig) -> None:
        """Test ⊴ is reflexive and ⊲ is not."""
        alpha = parse_ordinal("w^2 + 1")
        assert pointwise_le(alpha, alpha, 2, x_plus_1)
        assert not strict_pointwise_lt(alpha, alpha, 2, x_plus_1)

    def test_budget(self, x_plus_1: FundamentalConfig) -> None:
        """Test that long descents hit max_steps."""
        with pytest.raises(BudgetExceededError):
            pointwise_le(nat(0), parse_ordinal("w^2"), 5, x_plus_1, EvalBudget(max_steps=5))


class TestLeanBracket:
    """Tests for [α]_x."""

    def test_omega(self) -> None:
        """Test [ω]_2 = 2."""
        assert _fmt(lean_bracket(OMEGA, 2)) == "2"

    def test_matches_predecessor(self, x_plus_1: FundamentalConfig) -> None:
        """Test [ω²]_1 = ω·2 + 2 = P_2(ω²)."""
        alpha = parse_ordinal("w^2")
        assert _fmt(lean_bracket(alpha, 1)) == "w*2 + 2"
        assert lean_bracket(alpha, 1) == predecessor(alpha, 2, x_plus_1)

    def test_domain(self) -> None:
        """Test that 0 and terms above ω^ω are refused."""
        with pytest.raises(PreconditionError):
            lean_bracket(nat(0), 1)
        with pytest.raises(PreconditionError):
            lean_bracket(parse_ordinal("w^w"), 1)


class TestEvaluators:
    """Tests for the Hardy, length and fast-growing hierarchies."""

    def test_length(self, x_plus_1: FundamentalConfig) -> None:
        """Test h_ω(3) = 4 with h = succ."""
        assert evaluate(HierarchyKind.LENGTH, SUCC, OMEGA, 3, x_plus_1) == 4

    def test_hardy_finite(self, x_plus_1: FundamentalConfig) -> None:
        """Test H^3(5) = 8."""
        assert evaluate(HierarchyKind.HARDY, SUCC, nat(3), 5, x_plus_1) == 8

    @pytest.mark.parametrize("x", [0, 1, 4, 10])
    def test_hardy_omega(self, x: int, x_plus_1: FundamentalConfig) -> None:
        """Test H^ω(x) = 2x + 1 with ω_x = x + 1."""
        assert evaluate(HierarchyKind.HARDY, SUCC, OMEGA, x, x_plus_1) == 2 * x + 1

    def test_fast_low_levels(self, x_plus_1: FundamentalConfig) -> None:
        """Test f_0(4) = 5 and f_1(2) = 5."""
        assert evaluate(HierarchyKind.FAST, SUCC, nat(0), 4, x_plus_1) == 5
        assert evaluate(HierarchyKind.FAST, SUCC, nat(1), 2, x_plus_1) == 5

    def test_fast_classic_values(self, x_only: FundamentalConfig) -> None:
        """Test F_2(2) = 8 and F_3(2) = 2048 with ω_x = x."""
        assert evaluate(HierarchyKind.FAST, SUCC, nat(2), 2, x_only) == 8
        assert evaluate(HierarchyKind.FAST, SUCC, nat(3), 2, x_only) == 2048

    def test_length_counts_successor_steps(self, x_plus_1: FundamentalConfig) -> None:
        """Test h_α against H^α for h = succ: H^α(x) = x + h_α(x)."""
        alpha = parse_ordinal("w*2 + 1")
        hardy = evaluate(HierarchyKind.HARDY, SUCC, alpha, 3, x_plus_1)
        length = evaluate(HierarchyKind.LENGTH, SUCC, alpha, 3, x_plus_1)
        assert hardy == 3 + length

    def test_other_base_function(self, x_plus_1: FundamentalConfig) -> None:
        """Test the length hierarchy with h(x) = x·(x+1)."""
        h = SUCC.times_identity()
        assert evaluate(HierarchyKind.LENGTH, h, OMEGA, 2, x_plus_1) == 3

    def test_step_budget(self, x_plus_1: FundamentalConfig) -> None:
        """Test that f_4(3) runs out of steps."""
        with pytest.raises(BudgetExceededError) as exc_info:
            evaluate(HierarchyKind.FAST, SUCC, nat(4), 3, x_plus_1, EvalBudget(max_steps=1000))
        assert exc_info.value.ceiling == "max_steps"

    def test_meter_tracks_steps(self, x_plus_1: FundamentalConfig) -> None:
        """Test that the evaluator exposes its consumption."""
        evaluator = HierarchyEvaluator(SUCC, x_plus_1)
        assert evaluator(HierarchyKind.HARDY, nat(3), 0) == 3
        assert evaluator.meter.steps == 3
