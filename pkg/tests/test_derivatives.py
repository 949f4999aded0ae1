"""Tests for ordinal derivatives and the descent bound M_α."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from badseq_cli.derivatives import (
    DescentBound,
    d_n_closed_form,
    d_n_principal,
    derive,
    mbound,
)
from badseq_cli.errors import BudgetExceededError, OutOfFragmentError, PreconditionError
from badseq_cli.models import EvalBudget
from badseq_cli.nwqo.control import SUCC
from badseq_cli.nwqo.oracle import max_bad_length
from badseq_cli.ordinals.sampling import from_polynomial
from badseq_cli.ordinals.syntax import parse_ordinal
from badseq_cli.ordinals.terms import (
    ZERO,
    Ordering,
    compare,
    format_ordinal,
    nat,
)
from badseq_cli.otype import canonical_nwqo
from tests.strategies import fragment_terms


def _texts(alpha: str, n: int) -> list[str]:
    return [format_ordinal(d) for d in derive(parse_ordinal(alpha), n)]


class TestPrincipalDerivative:
    """Tests for Dₙ(ω^β)."""

    def test_omega(self) -> None:
        """Test Dₙ(ω^ω) at n = 3."""
        assert format_ordinal(d_n_principal(parse_ordinal("w"), 3)) == "w^2*2"

    def test_repeated_exponent(self) -> None:
        """Test D₂(ω^(ω·2)) = ω^(ω+1)·2."""
        assert format_ordinal(d_n_principal(parse_ordinal("w*2"), 2)) == "w^(w + 1)*2"

    def test_finite_exponent(self) -> None:
        """Test Dₙ(ω^2) = ω·(n-1)·2 under natural product."""
        assert format_ordinal(d_n_principal(nat(2), 4)) == "w*6"

    def test_requires_positive_n(self) -> None:
        """Test that n = 0 is refused."""
        with pytest.raises(PreconditionError):
            d_n_principal(nat(1), 0)

    def test_exponent_outside_fragment(self) -> None:
        """Test that β must be below ω^ω."""
        with pytest.raises(OutOfFragmentError):
            d_n_principal(parse_ordinal("w^w"), 2)

    @given(st.lists(st.integers(0, 3), min_size=1, max_size=4).map(from_polynomial), st.integers(1, 5))
    def test_closed_form_agrees(self, beta, n: int) -> None:
        """Test the closed form against the product expansion."""
        assert d_n_closed_form(beta, n) == d_n_principal(beta, n)


class TestDerive:
    """Tests for the derivative sets ∂ₙα."""

    @pytest.mark.parametrize(
        ("alpha", "n", "expected"),
        [
            ("w", 4, ["3"]),
            ("0", 3, []),
            ("1", 1, ["0"]),
            ("5", 2, ["4"]),
            ("w^w + w", 2, ["w^w + 1", "w*2"]),
        ],
    )
    def test_known_sets(self, alpha: str, n: int, expected: list[str]) -> None:
        """Test derivative sets computed by hand."""
        assert _texts(alpha, n) == expected

    def test_set_semantics(self) -> None:
        """Test len and membership."""
        derivatives = derive(parse_ordinal("w*2"), 3)
        assert len(derivatives) == 1
        assert parse_ordinal("w + 2") in derivatives

    def test_requires_positive_n(self) -> None:
        """Test that n = 0 is refused."""
        with pytest.raises(PreconditionError):
            derive(parse_ordinal("w"), 0)

    def test_outside_fragment(self) -> None:
        """Test that non-CNF input is refused."""
        with pytest.raises(OutOfFragmentError):
            derive(parse_ordinal("1+w"), 2)

    @given(fragment_terms(), st.integers(1, 4))
    def test_derivatives_are_smaller(self, alpha, n: int) -> None:
        """Test that every derivative lies strictly below α."""
        for derivative in derive(alpha, n):
            assert compare(derivative, alpha) == Ordering.LESS


class TestDescentBound:
    """Tests for M_α(n)."""

    @pytest.mark.parametrize("n", [1, 2, 5, 9])
    def test_omega(self, n: int) -> None:
        """Test M_ω(n) = n."""
        assert mbound(parse_ordinal("w"), SUCC, n) == n

    @pytest.mark.parametrize("k", [1, 3, 7])
    def test_finite(self, k: int) -> None:
        """Test M_k(n) = k for n ≥ 1."""
        assert mbound(nat(k), SUCC, 2) == k

    def test_zero_cases(self) -> None:
        """Test M_0(n) = 0 and M_α(0) = 0."""
        assert mbound(ZERO, SUCC, 5) == 0
        assert mbound(parse_ordinal("w^w"), SUCC, 0) == 0

    def test_omega_omega(self) -> None:
        """Test M at the order type of Γ_2*."""
        assert mbound(parse_ordinal("w^w"), SUCC, 1) == 1
        assert mbound(parse_ordinal("w^w"), SUCC, 2) == 4

    @pytest.mark.parametrize(("alpha", "n"), [("w^w", 2), ("w*2 + 1", 2), ("w + 3", 2), ("3", 1)])
    def test_bounds_oracle(self, alpha: str, n: int) -> None:
        """Test L_A(n) ≤ M_α(n) for the canonical A."""
        term = parse_ordinal(alpha)
        assert max_bad_length(canonical_nwqo(term), SUCC, n).length <= mbound(term, SUCC, n)

    def test_memo_shared_within_instance(self) -> None:
        """Test that one evaluator reuses its memo table."""
        bound = DescentBound(SUCC)
        bound(parse_ordinal("w^2"), 2)
        charged = bound.meter.nodes
        bound(parse_ordinal("w^2"), 2)
        assert bound.meter.nodes == charged

    def test_budget(self) -> None:
        """Test that fast-growing instances are refused."""
        with pytest.raises(BudgetExceededError) as exc_info:
            mbound(parse_ordinal("w^(w^2)"), SUCC, 5, EvalBudget(max_nodes=50))
        assert exc_info.value.ceiling == "max_nodes"
        assert "term" in exc_info.value.progress
