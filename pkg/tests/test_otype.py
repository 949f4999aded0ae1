"""Tests for maximal order types and canonical nwqos."""

from __future__ import annotations

import pytest
from hypothesis import given

from badseq_cli.errors import NonExponentialError, OutOfFragmentError
from badseq_cli.nwqo.algebra import normalize
from badseq_cli.nwqo.expr import Gamma, Nat, Prod, Seg, Star, Sum
from badseq_cli.nwqo.syntax import parse_nwqo
from badseq_cli.ordinals.syntax import parse_ordinal
from badseq_cli.ordinals.terms import ZERO, format_ordinal, natural_product, natural_sum
from badseq_cli.otype import canonical_nwqo, is_exponential, otype
from tests.strategies import exponential_nwqos, fragment_terms


class TestOtype:
    """Tests for order types of exponential nwqos."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("G3", "3"),
            ("G0", "0"),
            ("N", "w"),
            ("G2^*", "w^w"),
            ("G3^*", "w^(w^2)"),
            ("(G2)^* * (G2)^*", "w^(w*2)"),
            ("G3 * G2^*", "w^w*3"),
            ("G2^* + N + G1", "w^w + w + 1"),
            ("N * N", "w^2"),
        ],
    )
    def test_known_types(self, text: str, expected: str) -> None:
        """Test order types written by hand."""
        assert format_ordinal(otype(parse_nwqo(text))) == expected

    def test_segment_is_not_exponential(self) -> None:
        """Test that [p] reports the offending subterm."""
        with pytest.raises(NonExponentialError) as exc_info:
            otype(Seg(3))
        assert exc_info.value.subterm == "Seg3"
        assert not is_exponential(Prod(Seg(3), Nat()))

    def test_nested_star_is_not_exponential(self) -> None:
        """Test that stars of non-alphabets are refused."""
        assert not is_exponential(Star(Star(Gamma(2))))
        assert is_exponential(Star(Sum(Gamma(1), Gamma(1))))

    @given(exponential_nwqos(), exponential_nwqos())
    def test_homomorphism(self, a, b) -> None:
        """Test that sums and products map to natural sums and products."""
        assert otype(Sum(a, b)) == natural_sum(otype(a), otype(b))
        assert otype(Prod(a, b)) == natural_product(otype(a), otype(b))


class TestCanonicalNwqo:
    """Tests for the inverse of otype on the fragment."""

    def test_canonical(self) -> None:
        """Test ω^ω·3 + 2 ↦ Γ_3 × Γ_2* + Γ_2."""
        expr = canonical_nwqo(parse_ordinal("w^w*3 + 2"))
        assert expr == Sum(Prod(Gamma(3), Star(Gamma(2))), Gamma(2))

    def test_zero(self) -> None:
        """Test that 0 maps to the empty alphabet."""
        assert canonical_nwqo(ZERO) == Gamma(0)

    @pytest.mark.parametrize("text", ["w^(w^w)", "1+w"])
    def test_out_of_fragment(self, text: str) -> None:
        """Test terms outside the CNF fragment below ω^(ω^ω)."""
        with pytest.raises(OutOfFragmentError):
            canonical_nwqo(parse_ordinal(text))

    @given(fragment_terms())
    def test_round_trip(self, alpha) -> None:
        """Test otype(canonical(α)) = α."""
        assert otype(canonical_nwqo(alpha)) == alpha

    @given(exponential_nwqos())
    def test_canonical_of_otype_is_normal_form(self, expr) -> None:
        """Test that canonical(otype(A)) is the normal form of A."""
        assert canonical_nwqo(otype(expr)) == normalize(expr)
