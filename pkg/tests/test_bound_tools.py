"""Tests for the signature-bound tools."""

import sys
from fractions import Fraction
from pathlib import Path
from unittest.mock import MagicMock, patch

import pytest

# Add src to Python path for testing
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from braidsig.tools.bounds import (
    asymptotic_estimate,
    complete_length4_block,
    parse_fraction,
    prop_certificate,
    reduce_braid,
    register_bound_tools,
    run_verify,
    verify_signature_bound,
    word_defect,
)
from braidsig.utils.exceptions import BraidsigError, PreconditionError, ValidationError


class TestParseFraction:
    """Test rational argument parsing."""

    @pytest.mark.parametrize(
        "text,expected",
        [("1/2", Fraction(1, 2)), ("3", Fraction(3)), (" -7/4 ", Fraction(-7, 4))],
    )
    def test_valid(self, text, expected):
        """Test p/q and integer forms."""
        assert parse_fraction(text) == expected

    @pytest.mark.parametrize("text", ["half", "1/0", ""])
    def test_invalid(self, text):
        """Test that malformed rationals name the field."""
        with pytest.raises(ValidationError) as exc_info:
            parse_fraction(text, field="offset")
        assert exc_info.value.field == "offset"
        assert "rational" in str(exc_info.value)


class TestBoundTools:
    """Test the bound tool functions."""

    def test_word_defect(self):
        """Test the trefoil times itself."""
        assert word_defect("a1 a1 a1", "a1 a1 a1", 2) == {"defect": 1, "bound": 1}

    def test_asymptotic_estimate(self):
        """Test the estimate for a1 with n = 10."""
        result = asymptotic_estimate("a1", 2, 10)
        assert result["estimate"] == "-9/10"
        assert result["n_used"] == 10

    def test_reduce_braid(self):
        """Test the 7-letter 4-braid with target index 3."""
        result = reduce_braid("a1 a2 a3 a1 a2 a3 a1", 4, 3)
        assert result["i"] == 2
        assert result["components"] == [
            {"strands": 2, "word": "a1 a1 a1"},
            {"strands": 2, "word": "a1 a1"},
        ]

    def test_reduce_braid_split_word(self):
        """Test that a split closure is refused."""
        with pytest.raises(PreconditionError):
            reduce_braid("a1 a3", 4, 3)

    def test_complete_block(self):
        """Test that a1^4 completes to L."""
        result = complete_length4_block("a1 a1 a1 a1")
        assert result["target"] == "L"
        assert result["completed"] is not None

    def test_prop_certificate(self):
        """Test the certificate of a1 a2 a3 a1 with n = 4."""
        result = prop_certificate("a1 a2 a3 a1", 4)
        assert result["required"] == 31
        assert result["holds"] is True

    def test_prop_certificate_wraps_unexpected_errors(self):
        """Test that unexpected failures become BraidsigError."""
        with (
            patch(
                "braidsig.tools.bounds.main_prop_certificate",
                side_effect=RuntimeError("boom"),
            ),
            patch("braidsig.tools.bounds.logger") as mock_logger,
        ):
            with pytest.raises(BraidsigError) as exc_info:
                prop_certificate("a1 a2 a3 a1", 4)
        assert "Failed to compute certificate" in str(exc_info.value)
        assert mock_logger.error.called


class TestRunVerify:
    """Test bound argument resolution."""

    def test_unknown_family(self):
        """Test that an unknown family is rejected."""
        with pytest.raises(ValidationError) as exc_info:
            run_verify(3, 6, family="folklore", jobs=1)
        assert exc_info.value.field == "family"

    def test_missing_bound(self):
        """Test that a bound or a family is required."""
        with pytest.raises(ValidationError) as exc_info:
            run_verify(3, 6, jobs=1)
        assert exc_info.value.field == "bound"

    def test_family_sets_bound(self):
        """Test that a family fixes bound, strictness and offset."""
        report = run_verify(4, 6, family="corollary-5-12", jobs=1)
        assert report.bound == Fraction(5, 12)
        assert report.offset == Fraction(-7, 4)
        assert report.holds

    def test_explicit_offset(self):
        """Test that an offset string is parsed."""
        report = run_verify(2, 4, bound="1", offset="-1/2", jobs=1)
        assert report.offset == Fraction(-1, 2)
        assert report.holds

    def test_verify_signature_bound(self):
        """Test the dictionary form of a failing check."""
        result = verify_signature_bound(2, 4, bound="1", strict=True)
        assert result["holds"] is False
        assert len(result["counterexamples"]) == 3


class TestRegistration:
    """Test tool registration."""

    def test_register_bound_tools(self):
        """Test that six tools are registered."""
        mock_server = MagicMock()
        register_bound_tools(mock_server)
        assert mock_server.tool.call_count == 6
