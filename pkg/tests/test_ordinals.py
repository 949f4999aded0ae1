"""Tests for ordinal terms, CNF arithmetic and the ordinal parser."""

from __future__ import annotations

import random

import pytest
from hypothesis import given

from badseq_cli.errors import ParseError, PreconditionError
from badseq_cli.models import Trichotomy
from badseq_cli.ordinals.sampling import (
    from_polynomial,
    lean_terms_below_omega_omega,
    random_cnf,
    random_fragment,
)
from badseq_cli.ordinals.syntax import parse_ordinal
from badseq_cli.ordinals.terms import (
    OMEGA,
    ONE,
    ZERO,
    Ordering,
    classify,
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
from tests.strategies import cnf_terms


class TestConstruction:
    """Tests for term constructors."""

    def test_constants(self) -> None:
        """Test ZERO, ONE and OMEGA."""
        assert ZERO.is_zero
        assert ONE == nat(1)
        assert OMEGA == omega_power(ONE)

    def test_make_term_merges_neighbours(self) -> None:
        """Test that equal adjacent exponents are merged."""
        assert make_term([(ONE, 1), (ONE, 2)]) == omega_power(ONE, 3)

    def test_make_term_drops_zero_coefficients(self) -> None:
        """Test that zero coefficients disappear."""
        assert make_term([(ONE, 0), (ZERO, 2)]) == nat(2)

    def test_make_term_rejects_negative(self) -> None:
        """Test that negative coefficients are refused."""
        with pytest.raises(PreconditionError):
            make_term([(ZERO, -1)])

    def test_as_natural(self) -> None:
        """Test reading finite terms back as naturals."""
        assert nat(7).as_natural() == 7
        assert ZERO.as_natural() == 0
        assert OMEGA.as_natural() is None

    def test_from_polynomial(self) -> None:
        """Test building ω²·2 + 3 from coefficients."""
        assert from_polynomial([2, 0, 3]) == syntactic_sum(omega_power(nat(2), 2), nat(3))


class TestParsing:
    """Tests for the ordinal grammar."""

    def test_parse_and_format(self) -> None:
        """Test a mixed term reads back to the same text."""
        term = parse_ordinal("w^w*3 + w + 2")
        assert format_ordinal(term) == "w^w*3 + w + 2"

    def test_unicode_omega(self) -> None:
        """Test that ω is accepted for w."""
        assert parse_ordinal("ω^ω") == parse_ordinal("w^w")

    def test_nested_exponent(self) -> None:
        """Test parenthesized exponents."""
        term = parse_ordinal("w^(w+1)*2")
        assert term == omega_power(syntactic_sum(OMEGA, ONE), 2)
        assert format_ordinal(term) == "w^(w + 1)*2"

    def test_right_associative_power(self) -> None:
        """Test that w^w^w is ω^(ω^ω)."""
        assert parse_ordinal("w^w^w") == omega_power(omega_power(OMEGA))

    def test_sums_kept_as_written(self) -> None:
        """Test that 1+w is not normalized by the parser."""
        term = parse_ordinal("1+w")
        assert term == syntactic_sum(ONE, OMEGA)
        assert not is_cnf(term)

    def test_repetition(self) -> None:
        """Test that t*n repeats the term."""
        assert parse_ordinal("(w+1)*2") == parse_ordinal("w+1+w+1")

    def test_error_position(self) -> None:
        """Test that errors point at the failing token."""
        with pytest.raises(ParseError) as exc_info:
            parse_ordinal("w^")
        assert exc_info.value.position == 2
        assert exc_info.value.caret().endswith("  ^")

    def test_trailing_input(self) -> None:
        """Test that trailing input is rejected."""
        with pytest.raises(ParseError):
            parse_ordinal("w w")

    def test_unknown_character(self) -> None:
        """Test that characters of no grammar are rejected."""
        with pytest.raises(ParseError):
            parse_ordinal("w - 1")

    @given(cnf_terms())
    def test_round_trip(self, term) -> None:
        """Test that formatting then parsing returns the same term."""
        assert parse_ordinal(format_ordinal(term)) == term


class TestNormalForm:
    """Tests for CNF checks, normalization and comparison."""

    def test_to_cnf_absorbs_smaller_summands(self) -> None:
        """Test that 1 + ω = ω and ω + ω² = ω²."""
        assert to_cnf(parse_ordinal("1+w")) == OMEGA
        assert to_cnf(parse_ordinal("w+w^2")) == omega_power(nat(2))

    def test_to_cnf_merges(self) -> None:
        """Test that ω + 1 + ω = ω·2."""
        assert to_cnf(parse_ordinal("w+1+w")) == omega_power(ONE, 2)

    def test_compare(self) -> None:
        """Test basic comparisons."""
        assert compare(OMEGA, nat(5)) == Ordering.GREATER
        assert compare(nat(3), nat(3)) == Ordering.EQUAL
        assert compare(parse_ordinal("w*2"), parse_ordinal("w^2")) == Ordering.LESS

    def test_compare_requires_cnf(self) -> None:
        """Test that non-CNF terms are refused."""
        with pytest.raises(PreconditionError):
            compare(parse_ordinal("1+w"), OMEGA)

    @given(cnf_terms())
    def test_to_cnf_is_identity_on_cnf(self, term) -> None:
        """Test that CNF terms are fixed points of to_cnf."""
        assert is_cnf(term)
        assert to_cnf(term) == term

    @given(cnf_terms(), cnf_terms())
    def test_compare_antisymmetric(self, a, b) -> None:
        """Test that swapping arguments negates the result."""
        assert int(compare(a, b)) == -int(compare(b, a))
        assert (compare(a, b) == Ordering.EQUAL) == (a == b)

    @given(cnf_terms(), cnf_terms())
    def test_sum_normalizes_below_natural_sum(self, a, b) -> None:
        """Test that the ordinal sum never exceeds the natural sum."""
        joined = to_cnf(syntactic_sum(a, b))
        assert compare(joined, natural_sum(a, b)) != Ordering.GREATER


class TestNaturalArithmetic:
    """Tests for Hessenberg sum and product."""

    def test_natural_sum(self) -> None:
        """Test (ω+1) ⊕ ω = ω·2 + 1."""
        result = natural_sum(parse_ordinal("w+1"), OMEGA)
        assert format_ordinal(result) == "w*2 + 1"

    def test_natural_product(self) -> None:
        """Test (ω+1) ⊗ (ω+1) = ω² + ω·2 + 1."""
        a = parse_ordinal("w+1")
        assert format_ordinal(natural_product(a, a)) == "w^2 + w*2 + 1"

    def test_product_of_powers_adds_exponents(self) -> None:
        """Test ω^ω ⊗ ω^ω = ω^(ω·2)."""
        power = omega_power(OMEGA)
        assert format_ordinal(natural_product(power, power)) == "w^(w*2)"

    def test_units(self) -> None:
        """Test that 0 and 1 are units."""
        a = parse_ordinal("w^2*3 + 4")
        assert natural_sum(a, ZERO) == a
        assert natural_product(a, ONE) == a
        assert natural_product(a, ZERO) == ZERO

    def test_requires_cnf(self) -> None:
        """Test that non-CNF input is refused."""
        with pytest.raises(PreconditionError):
            natural_sum(parse_ordinal("1+w"), ONE)

    @given(cnf_terms(), cnf_terms())
    def test_commutative(self, a, b) -> None:
        """Test commutativity of both operations."""
        assert natural_sum(a, b) == natural_sum(b, a)
        assert natural_product(a, b) == natural_product(b, a)

    @given(cnf_terms(depth=1), cnf_terms(depth=1), cnf_terms(depth=1))
    def test_associative_and_distributive(self, a, b, c) -> None:
        """Test associativity and distributivity."""
        assert natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c))
        assert natural_product(natural_product(a, b), c) == natural_product(
            a, natural_product(b, c)
        )
        assert natural_product(a, natural_sum(b, c)) == natural_sum(
            natural_product(a, b), natural_product(a, c)
        )

    @given(cnf_terms(), cnf_terms(), cnf_terms())
    def test_sum_strictly_monotone(self, a, b, c) -> None:
        """Test that a < b implies a ⊕ c < b ⊕ c."""
        if compare(a, b) == Ordering.LESS:
            assert compare(natural_sum(a, c), natural_sum(b, c)) == Ordering.LESS

    @given(cnf_terms(), cnf_terms())
    def test_results_are_cnf(self, a, b) -> None:
        """Test that results stay in CNF."""
        assert is_cnf(natural_sum(a, b))
        assert is_cnf(natural_product(a, b))


class TestLeannessAndShape:
    """Tests for leanness and the zero/successor/limit trichotomy."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [("0", 0), ("5", 5), ("w", 1), ("w^2", 2), ("w^w*3 + 2", 3), ("w^(w*4)", 4)],
    )
    def test_leanness(self, text: str, expected: int) -> None:
        """Test the largest natural occurring in a term."""
        assert leanness(parse_ordinal(text)) == expected

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("0", Trichotomy.ZERO),
            ("3", Trichotomy.SUCCESSOR),
            ("w", Trichotomy.LIMIT),
            ("w+1", Trichotomy.SUCCESSOR),
            ("w^2 + w", Trichotomy.LIMIT),
        ],
    )
    def test_classify(self, text: str, expected: Trichotomy) -> None:
        """Test the trichotomy on the last summand."""
        assert classify(parse_ordinal(text)) == expected


class TestSampling:
    """Tests for the deterministic term generators."""

    def test_random_cnf_is_cnf_and_deterministic(self) -> None:
        """Test that samples are CNF and repeat for the same seed."""
        rng_a, rng_b = random.Random(3), random.Random(3)
        first = [random_cnf(rng_a, 3, 5, 2) for _ in range(20)]
        second = [random_cnf(rng_b, 3, 5, 2) for _ in range(20)]
        assert first == second
        assert all(is_cnf(term) for term in first)

    def test_random_fragment_below_omega_omega_omega(self) -> None:
        """Test that every fragment exponent is a natural polynomial in ω."""
        rng = random.Random(5)
        for _ in range(50):
            term = random_fragment(rng, 2, 4, 3)
            assert is_cnf(term)
            for exponent, _ in term.summands:
                assert all(e.as_natural() is not None for e, _ in exponent.summands)

    def test_lean_terms_enumeration(self) -> None:
        """Test the count and bounds of enumerated lean terms."""
        terms = list(lean_terms_below_omega_omega(2, 2))
        assert len(terms) == 27
        assert len(set(terms)) == 27
        assert all(leanness(t) <= 2 for t in terms)
        assert all(compare(t, omega_power(nat(3))) == Ordering.LESS for t in terms)
