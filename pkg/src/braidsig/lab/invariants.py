"""Link invariants of positive braid closures and signature defect."""

from __future__ import annotations

from functools import lru_cache

import structlog

from ..braids.fence import LinkInvariants, betti_and_c
from ..braids.seifert import seifert_matrix
from ..braids.words import BraidWord, Letter, concat, require_positive
from ..linalg.inertia import inertia

logger = structlog.get_logger(__name__)


@lru_cache(maxsize=4096)
def _signature_nullity(strands: int, letters: tuple[Letter, ...]) -> tuple[int, int]:
    matrix = seifert_matrix(BraidWord(strands, letters))
    result = inertia(matrix.symmetrized())
    return result.signature, result.nullity


def signature(word: BraidWord) -> int:
    """Signature of the closure of a positive word."""
    require_positive(word)
    return _signature_nullity(word.strands, word.letters)[0]


def invariants(word: BraidWord) -> LinkInvariants:
    """b1 and c from Bennequin's formula, σ and nullity from the Seifert form."""
    b1, c = betti_and_c(word)
    sigma, nullity = _signature_nullity(word.strands, word.letters)
    logger.debug("Invariants computed", word=str(word), b1=b1, c=c, sigma=sigma)
    return LinkInvariants(b1=b1, c=c, sigma=sigma, nullity=nullity)


def defect(u: BraidWord, v: BraidWord) -> int:
    """|σ(uv) - σ(u) - σ(v)|; at most b - max(c(u), c(v))."""
    uv = concat(u, v)
    return abs(signature(uv) - signature(u) - signature(v))


def defect_bound(u: BraidWord, v: BraidWord) -> int:
    """The guaranteed bound b - max(c(u), c(v)) on :func:`defect`."""
    _, c_u = betti_and_c(u)
    _, c_v = betti_and_c(v)
    return u.strands - max(c_u, c_v)


def handle_deletion_deltas(word: BraidWord) -> list[int]:
    """|σ(word) - σ(word with letter j deleted)| for every position j."""
    base = signature(word)
    deltas = []
    for j in range(word.length):
        shorter = BraidWord(word.strands, word.letters[:j] + word.letters[j + 1 :])
        deltas.append(abs(base - signature(shorter)))
    return deltas
