"""Tools for the signature-bound procedures: reduction, blocks, certificates."""

from fractions import Fraction
from typing import Any

import structlog

from ..braids.words import format_word, parse_word
from ..lab.asymptotic import asymptotic_sigma
from ..lab.blocks import BLOCK_STRANDS, complete_block
from ..lab.certificate import main_prop_certificate
from ..lab.invariants import defect, defect_bound
from ..lab.reduction import reduction_decompose
from ..lab.verify import BOUND_FAMILIES, BoundReport, verify_bound
from ..utils.exceptions import BraidsigError, ValidationError
from .braids import load_word

logger = structlog.get_logger(__name__)


def parse_fraction(text: str, field: str = "bound") -> Fraction:
    """Parse "p/q" or an integer into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError):
        raise ValidationError(f"Expected a rational p/q, got {text!r}", field=field)


def word_defect(first: str, second: str, strands: int) -> dict[str, Any]:
    """Signature defect of a product with its guaranteed bound."""
    u, v = load_word(first, strands), load_word(second, strands)
    return {"defect": defect(u, v), "bound": defect_bound(u, v)}


def asymptotic_estimate(word: str, strands: int, n: int) -> dict[str, Any]:
    """Estimate the asymptotic signature from σ(βⁿ)/n.

    Args:
        word: Positive braid word
        strands: Number of strands
        n: Power used for the estimate

    Returns:
        Dictionary with the estimate and a guaranteed interval
    """
    return asymptotic_sigma(load_word(word, strands), n).to_dict()


def reduce_braid(word: str, strands: int, b_target: int) -> dict[str, Any]:
    """Reduce a positive braid to a connected sum on at most b_target strands."""
    result = reduction_decompose(load_word(word, strands), b_target)
    return {
        "i": result.i,
        "reduced": format_word(result.reduced),
        "b1_reduced": result.b1_reduced,
        "components": [
            {"strands": w.strands, "word": format_word(w)} for w in result.components
        ],
    }


def complete_length4_block(block: str) -> dict[str, Any]:
    return complete_block(parse_word(block, BLOCK_STRANDS)).to_dict()


def prop_certificate(word: str, n: int) -> dict[str, Any]:
    """Run the block-completion certificate on βⁿ for a positive 4-braid."""
    try:
        return main_prop_certificate(parse_word(word, BLOCK_STRANDS), n).to_dict()
    except BraidsigError:
        raise
    except Exception as e:
        logger.error("Error computing certificate", word=word, n=n, error=str(e))
        raise BraidsigError(f"Failed to compute certificate: {e!s}")


def run_verify(
    strands: int,
    max_length: int,
    bound: str | None = None,
    strict: bool = False,
    offset: str | None = None,
    family: str | None = None,
    jobs: int | None = None,
) -> BoundReport:
    """Resolve bound arguments and run the exhaustive check.

    A named ``family`` fixes bound, strictness and offset; otherwise ``bound``
    is required.
    """
    if family is not None:
        if family not in BOUND_FAMILIES:
            raise ValidationError(
                f"Unknown bound family {family!r}; choose from "
                f"{', '.join(BOUND_FAMILIES)}",
                field="family",
            )
        chosen = BOUND_FAMILIES[family]
        value, is_strict, shift = chosen.bound, chosen.strict, chosen.offset(strands)
    else:
        if bound is None:
            raise ValidationError("Either a bound or a family is required", field="bound")
        value = parse_fraction(bound)
        is_strict = strict
        shift = parse_fraction(offset, field="offset") if offset else Fraction(0)

    logger.info(
        "Verification requested",
        strands=strands,
        max_length=max_length,
        bound=str(value),
        strict=is_strict,
        offset=str(shift),
    )
    return verify_bound(strands, max_length, value, is_strict, shift, jobs=jobs)


def verify_signature_bound(
    strands: int,
    max_length: int,
    bound: str | None = None,
    strict: bool = False,
    family: str | None = None,
) -> dict[str, Any]:
    return run_verify(strands, max_length, bound, strict, family=family).to_dict()


def register_bound_tools(mcp_server) -> None:
    """Register signature-bound tools."""

    @mcp_server.tool()
    def _word_defect(first: str, second: str, strands: int) -> dict[str, Any]:
        return word_defect(first, second, strands)

    @mcp_server.tool()
    def _asymptotic_estimate(word: str, strands: int, n: int) -> dict[str, Any]:
        return asymptotic_estimate(word, strands, n)

    @mcp_server.tool()
    def _reduce_braid(word: str, strands: int, b_target: int) -> dict[str, Any]:
        return reduce_braid(word, strands, b_target)

    @mcp_server.tool()
    def _complete_block(block: str) -> dict[str, Any]:
        return complete_length4_block(block)

    @mcp_server.tool()
    def _prop_certificate(word: str, n: int) -> dict[str, Any]:
        return prop_certificate(word, n)

    @mcp_server.tool()
    def _verify_signature_bound(
        strands: int,
        max_length: int,
        bound: str | None = None,
        strict: bool = False,
        family: str | None = None,
    ) -> dict[str, Any]:
        return verify_signature_bound(strands, max_length, bound, strict, family)
