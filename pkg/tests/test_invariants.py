"""Tests for link invariants, signature defect and 1-handle stability."""

import sys
from itertools import product
from pathlib import Path

import pytest

# Add src to Python path for testing
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from braidsig.braids.fence import LinkInvariants
from braidsig.braids.words import BraidWord, parse_word
from braidsig.lab.invariants import (
    defect,
    defect_bound,
    handle_deletion_deltas,
    invariants,
    signature,
)
from braidsig.utils.exceptions import NotPositiveError, StrandMismatchError

FIG1 = "a1 a2 a1 a3 a2 a2 a1 a3"


def positive_words(b: int, max_length: int):
    for length in range(max_length + 1):
        for indices in product(range(1, b), repeat=length):
            yield BraidWord.positive(b, indices)


class TestInvariants:
    """Test the combined invariants."""

    def test_fig1_word(self):
        """Test the 8-letter 4-braid, negative definite of rank 5."""
        assert invariants(parse_word(FIG1, 4)) == LinkInvariants(b1=5, c=1, sigma=-5, nullity=0)

    def test_hopf_link(self):
        """Test a1^2."""
        assert invariants(parse_word("a1 a1", 2)) == LinkInvariants(b1=1, c=1, sigma=-1, nullity=0)

    def test_unlink(self):
        """Test the empty word on three strands."""
        assert invariants(BraidWord(3)) == LinkInvariants(b1=0, c=3, sigma=0, nullity=0)

    def test_split_link(self):
        """Test a1^2 a3^2, a split union of two Hopf links."""
        inv = invariants(parse_word("a1 a1 a3 a3", 4))
        assert (inv.b1, inv.c, inv.sigma) == (2, 2, -2)

    def test_negative_word_rejected(self):
        """Test that signed words are rejected."""
        with pytest.raises(NotPositiveError):
            signature(parse_word("a1 A1", 2))


class TestDefect:
    """Test the signature defect."""

    def test_two_strands(self):
        """Test defect(a1^3, a1^3) = 1."""
        word = parse_word("a1 a1 a1", 2)
        assert defect(word, word) == 1
        assert defect_bound(word, word) == 1

    def test_empty_factor(self):
        """Test that the empty word adds nothing."""
        word = parse_word(FIG1, 4)
        assert defect(word, BraidWord(4)) == 0

    def test_bound_uses_split_components(self):
        """Test b - max(c(u), c(v))."""
        assert defect_bound(parse_word("a1", 4), parse_word("a1 a2 a3", 4)) == 1
        assert defect_bound(parse_word("a1 a2 a3", 4), parse_word("a1 a2 a3", 4)) == 3

    def test_strand_mismatch(self):
        """Test that the factors need equal strand counts."""
        with pytest.raises(StrandMismatchError):
            defect(parse_word("a1", 2), parse_word("a1", 3))

    def test_quasimorphism_short_words(self):
        """Test defect <= min(b - 1, bound) for 4-braids with l <= 3."""
        words = list(positive_words(4, 3))
        for u in words:
            for v in words:
                d = defect(u, v)
                assert d <= 3
                assert d <= defect_bound(u, v)

    @pytest.mark.slow
    def test_quasimorphism_exhaustive(self):
        """Test defect <= 3 for all positive 4-braid pairs with l <= 5."""
        words = list(positive_words(4, 5))
        for u in words:
            for v in words:
                assert defect(u, v) <= 3


class TestHandleDeletion:
    """Test that deleting one letter changes σ by at most one."""

    def test_trefoil(self):
        """Test the deltas of a1^3."""
        assert handle_deletion_deltas(parse_word("a1 a1 a1", 2)) == [1, 1, 1]

    def test_empty(self):
        """Test that the empty word has no deletions."""
        assert handle_deletion_deltas(BraidWord(3)) == []

    def test_short_words(self):
        """Test every positive 4-braid word with l <= 5."""
        for word in positive_words(4, 5):
            assert all(d <= 1 for d in handle_deletion_deltas(word))

    @pytest.mark.slow
    def test_exhaustive(self):
        """Test every positive 4-braid word with l <= 8."""
        for word in positive_words(4, 8):
            assert all(d <= 1 for d in handle_deletion_deltas(word))
