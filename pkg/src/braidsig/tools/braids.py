"""Braid invariant tools shared by the MCP server and the command line."""

from typing import Any

import structlog

from ..braids.fence import betti_and_c, fence_diagram
from ..braids.garside import braid_equal, normal_form
from ..braids.seifert import seifert_matrix
from ..braids.torus import sigma_torus, torus_word
from ..braids.words import BraidWord, format_word, parse_word, rotate180
from ..lab.invariants import invariants
from ..linalg.inertia import inertia
from ..utils.exceptions import BraidsigError, ValidationError

logger = structlog.get_logger(__name__)


def load_word(text: str, strands: int | None) -> BraidWord:
    """Parse a word argument, rejecting a missing strand count."""
    if strands is None:
        raise ValidationError("Strand count is required", field="strands")
    return parse_word(text, strands)


def braid_invariants(word: str, strands: int) -> dict[str, Any]:
    """Compute b1, c, signature and nullity of a positive braid closure.

    Args:
        word: Braid word such as "a1 a2 a1"
        strands: Number of strands

    Returns:
        Dictionary with the invariants
    """
    try:
        braid = load_word(word, strands)
        result = invariants(braid)
        logger.info("Invariants requested", word=word, strands=strands, sigma=result.sigma)
        return {
            "word": format_word(braid),
            "strands": strands,
            "l": braid.length,
            **result.to_dict(),
        }
    except BraidsigError:
        raise
    except Exception as e:
        logger.error("Error computing invariants", word=word, error=str(e))
        raise BraidsigError(f"Failed to compute invariants: {e!s}")


def braid_signature(word: str, strands: int) -> int:
    return braid_invariants(word, strands)["sigma"]


def braid_betti(word: str, strands: int) -> dict[str, Any]:
    """b1 and c by Bennequin's formula next to the fence-graph count."""
    braid = load_word(word, strands)
    b1, c = betti_and_c(braid)
    fd = fence_diagram(braid)
    return {
        "b1": b1,
        "c": c,
        "graph_b1": fd.graph_betti(),
        "graph_components": fd.graph_components(),
    }


def braid_normal_form(word: str, strands: int) -> dict[str, Any]:
    """Garside left normal form of a braid word.

    Args:
        word: Braid word, inverse letters written "A<k>"
        strands: Number of strands

    Returns:
        Dictionary with the canonical string, Δ exponent and factors
    """
    braid = load_word(word, strands)
    nf = normal_form(braid)
    logger.info("Normal form computed", word=word, normal_form=str(nf))
    return {
        "normal_form": nf.canonical_string(),
        "inf": nf.inf,
        "canonical_length": nf.canonical_length,
        "factors": [format_word(f.word()) for f in nf.factors],
    }


def braids_equal(first: str, second: str, strands: int) -> dict[str, Any]:
    u, v = load_word(first, strands), load_word(second, strands)
    equal = braid_equal(u, v)
    logger.info("Braid equality checked", first=first, second=second, equal=equal)
    return {"equal": equal}


def braid_rotate(word: str, strands: int) -> dict[str, Any]:
    """Rotate a braid by 180 degrees in the plane."""
    braid = load_word(word, strands)
    rotated = rotate180(braid)
    return {
        "word": format_word(rotated),
        "braid_equal": braid_equal(braid, rotated),
    }


def braid_seifert(word: str, strands: int) -> dict[str, Any]:
    """Seifert matrix in the brick basis, with signature and determinant."""
    braid = load_word(word, strands)
    matrix = seifert_matrix(braid)
    result = inertia(matrix.symmetrized())
    return {
        **matrix.to_dict(),
        "dimension": matrix.dimension,
        "determinant": matrix.determinant(),
        "signature": result.signature,
        "nullity": result.nullity,
    }


def torus_signature(p: int, q: int) -> dict[str, Any]:
    """Signature of the torus link T(p, q), 2 <= p <= 4."""
    sigma = sigma_torus(p, q)
    b1, c = betti_and_c(torus_word(p, q))
    logger.info("Torus signature computed", p=p, q=q, sigma=sigma)
    return {"p": p, "q": q, "sigma": sigma, "b1": b1, "c": c}


def register_braid_tools(mcp_server) -> None:
    """Register braid invariant tools."""

    @mcp_server.tool()
    def _braid_invariants(word: str, strands: int) -> dict[str, Any]:
        return braid_invariants(word, strands)

    @mcp_server.tool()
    def _braid_normal_form(word: str, strands: int) -> dict[str, Any]:
        return braid_normal_form(word, strands)

    @mcp_server.tool()
    def _braids_equal(first: str, second: str, strands: int) -> dict[str, Any]:
        return braids_equal(first, second, strands)

    @mcp_server.tool()
    def _braid_seifert(word: str, strands: int) -> dict[str, Any]:
        return braid_seifert(word, strands)

    @mcp_server.tool()
    def _torus_signature(p: int, q: int) -> dict[str, Any]:
        return torus_signature(p, q)
