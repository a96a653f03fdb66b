"""Tests for Garside normal forms and braid equality."""

import random
import sys
from itertools import product
from pathlib import Path

import pytest
from hypothesis import given, settings

# Add src to Python path for testing
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from braidsig.braids.garside import (
    PermutationBraid,
    braid_equal,
    half_twist,
    normal_form,
    normal_form_key,
    positive_rewrites,
)
from braidsig.braids.words import BraidWord, Letter, concat, inverse, parse_word, power, rotate180
from braidsig.utils.exceptions import StrandMismatchError, ValidationError
from tests.oracles import rewriting_class
from tests.strategies import braid_words

DELTA = parse_word("a1 a3 a2 a1 a3 a2", 4)
L = parse_word("a1 a2 a3 a1 a2 a3", 4)
R = parse_word("a3 a2 a1 a3 a2 a1", 4)


class TestHalfTwist:
    """Test the positive half twist."""

    def test_two_strands(self):
        """Test Δ_2 = a1."""
        assert half_twist(2) == parse_word("a1", 2)

    def test_three_strands(self):
        """Test Δ_3 = a1 a2 a1."""
        assert half_twist(3) == parse_word("a1 a2 a1", 3)

    def test_four_strands(self):
        """Test Δ_4 equals a1 a3 a2 a1 a3 a2."""
        assert braid_equal(half_twist(4), DELTA)

    @pytest.mark.parametrize("b", range(2, 8))
    def test_length(self, b):
        """Test the length b(b-1)/2."""
        assert half_twist(b).length == b * (b - 1) // 2

    def test_square_central_on_three_strands(self):
        """Test a1 Δ² = Δ² a1 and a2 Δ² = Δ² a2 in B_3."""
        full = power(half_twist(3), 2)
        for text in ("a1", "a2"):
            letter = parse_word(text, 3)
            assert braid_equal(concat(letter, full), concat(full, letter))

    def test_too_few_strands(self):
        """Test that b < 2 is rejected."""
        with pytest.raises(ValidationError) as exc_info:
            half_twist(1)
        assert exc_info.value.field == "b"


class TestNormalForm:
    """Test left normal forms."""

    def test_braid_relation(self):
        """Test a1 a2 a1 = a2 a1 a2."""
        assert normal_form(parse_word("a1 a2 a1", 3)) == normal_form(parse_word("a2 a1 a2", 3))

    def test_commutation(self):
        """Test a1 a3 = a3 a1."""
        assert normal_form(parse_word("a1 a3", 4)) == normal_form(parse_word("a3 a1", 4))

    def test_full_twist_products(self):
        """Test LL = RR = ΔΔ."""
        full = normal_form(concat(DELTA, DELTA))
        assert normal_form(concat(L, L)) == full
        assert normal_form(concat(R, R)) == full
        assert full.inf == 2
        assert full.factors == ()

    def test_canonical_strings(self):
        """Test the canonical string format."""
        assert normal_form(DELTA).canonical_string() == "Δ^1"
        assert normal_form(BraidWord(4)).canonical_string() == "Δ^0"
        assert normal_form(parse_word("a1", 3)).canonical_string() == "Δ^0 | 213"
        assert normal_form_key(parse_word("a1 a2", 3)) == "Δ^0 | 231"

    def test_inverse_letters(self):
        """Test that inverse generators give negative Δ powers."""
        assert normal_form(parse_word("A1", 2)).canonical_string() == "Δ^-1"
        assert normal_form(parse_word("A1", 3)).canonical_string() == "Δ^-1 | 231"
        assert normal_form(parse_word("a1 A1", 2)).canonical_string() == "Δ^0"

    def test_factors_are_proper(self):
        """Test that no factor is trivial or Δ and pairs are left-weighted."""
        word = parse_word("a1 a1 a2 a3 a3 a2 a1 a2 a2 a3", 4)
        nf = normal_form(word)
        for factor in nf.factors:
            assert not factor.is_identity
            assert not factor.is_delta
        for left, right in zip(nf.factors, nf.factors[1:]):
            assert right.starting_set() <= left.finishing_set()
        assert nf.canonical_length == len(nf.factors)

    def test_to_word(self):
        """Test that the reconstructed word is braid-equal."""
        word = parse_word("a1 A2 a3 a3 A1 a2", 4)
        assert braid_equal(normal_form(word).to_word(), word)

    def test_to_word_negative_power(self):
        """Test reconstruction with a negative Δ power."""
        word = parse_word("A1 A2 A1 A1", 3)
        nf = normal_form(word)
        assert nf.inf < 0
        assert braid_equal(nf.to_word(), word)

    @given(braid_words(max_length=8, positive=False))
    def test_inverse_cancels(self, word):
        """Test that u u^-1 has the identity normal form."""
        nf = normal_form(concat(word, inverse(word)))
        assert nf.inf == 0
        assert nf.factors == ()

    @given(braid_words(max_length=8, positive=False))
    def test_round_trip(self, word):
        """Test that to_word gives back the same braid."""
        assert braid_equal(normal_form(word).to_word(), word)


class TestBraidEqual:
    """Test braid equality."""

    def test_distinct_generators(self):
        """Test a1 != a2."""
        assert not braid_equal(parse_word("a1", 3), parse_word("a2", 3))

    def test_strand_mismatch(self):
        """Test that different strand counts are rejected."""
        with pytest.raises(StrandMismatchError):
            braid_equal(parse_word("a1", 3), parse_word("a1", 4))

    def test_rotation_fixed_points(self):
        """Test L, R and Δ equal their rotations."""
        for word in (L, R, DELTA):
            assert braid_equal(word, rotate180(word))

    def test_full_twist_commutes_with_a1(self):
        """Test Δ² a1 = a1 Δ² on four strands."""
        full = power(DELTA, 2)
        a1 = parse_word("a1", 4)
        assert braid_equal(concat(full, a1), concat(a1, full))

    def test_full_twist_central_random(self):
        """Test w Δ² = Δ² w for 100 random 4-braid words."""
        rng = random.Random(20240417)
        full = power(DELTA, 2)
        for _ in range(100):
            length = rng.randint(1, 12)
            word = BraidWord(
                4,
                tuple(Letter(rng.randint(1, 3), rng.choice((1, -1))) for _ in range(length)),
            )
            assert braid_equal(concat(word, full), concat(full, word))

    @settings(max_examples=50)
    @given(braid_words(max_strands=5, max_length=8, positive=False))
    def test_full_twist_central_property(self, word):
        """Test Δ² is central for b <= 5."""
        full = power(half_twist(word.strands), 2)
        assert braid_equal(concat(word, full), concat(full, word))

    def test_agrees_with_rewriting_oracle(self):
        """Test that normal forms partition short positive words like rewriting does."""
        for b in range(2, 5):
            for length in range(0, 7):
                key_to_class: dict[str, set] = {}
                class_to_key: dict[frozenset, set] = {}
                for indices in product(range(1, b), repeat=length):
                    cls = rewriting_class(indices)
                    key = normal_form_key(BraidWord.positive(b, indices))
                    key_to_class.setdefault(key, set()).add(cls)
                    class_to_key.setdefault(cls, set()).add(key)
                assert all(len(v) == 1 for v in key_to_class.values())
                assert all(len(v) == 1 for v in class_to_key.values())


class TestPermutationBraid:
    """Test permutation braids."""

    def test_from_word(self):
        """Test the permutation of a1 a2."""
        perm = PermutationBraid.from_word(parse_word("a1 a2", 3))
        assert perm.one_line() == "231"
        assert perm.finishing_set() == frozenset({2})
        assert perm.starting_set() == frozenset({1})
        assert braid_equal(perm.word(), parse_word("a1 a2", 3))

    def test_double_crossing_rejected(self):
        """Test that a1 a1 is not a permutation braid."""
        with pytest.raises(ValidationError):
            PermutationBraid.from_word(parse_word("a1 a1", 2))

    def test_delta(self):
        """Test that Δ is recognized."""
        perm = PermutationBraid.from_word(half_twist(4))
        assert perm.is_delta
        assert perm.finishing_set() == perm.starting_set() == frozenset({1, 2, 3})


class TestPositiveRewrites:
    """Test the rewriting orbit of positive words."""

    def test_braid_relation_orbit(self):
        """Test the two words of Δ_3."""
        assert positive_rewrites(parse_word("a1 a2 a1", 3)) == [
            parse_word("a1 a2 a1", 3),
            parse_word("a2 a1 a2", 3),
        ]

    def test_delta_has_sixteen_words(self):
        """Test the number of positive words of Δ_4."""
        words = positive_rewrites(DELTA)
        assert len(words) == 16
        assert all(braid_equal(w, DELTA) for w in words)

    def test_rigid_word(self):
        """Test that a2 a1 a1 a2 admits no other positive word."""
        word = parse_word("a2 a1 a1 a2", 4)
        assert positive_rewrites(word) == [word]

    def test_requires_positive(self):
        """Test that signed words are rejected."""
        with pytest.raises(ValidationError):
            positive_rewrites(parse_word("a1 A2", 3))
