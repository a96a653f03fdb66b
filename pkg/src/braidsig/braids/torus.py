"""Signatures of torus links T(p, q) by the Gordon-Litherland-Murasugi recursion.

Used as an oracle independent of the Seifert pipeline. T(p, q) is the closure
of (a_1 ⋯ a_{p-1})^q and negative signatures are the convention for positive
braids, so σ(T(2, n)) = 1 - n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..utils.exceptions import ValidationError
from .words import BraidWord

MAX_ORACLE_STRANDS = 4


@dataclass(frozen=True)
class TorusParams:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValidationError(f"p must be at least 2, got {self.p}", field="p")
        if self.q < 1:
            raise ValidationError(f"q must be at least 1, got {self.q}", field="q")

    def word(self) -> BraidWord:
        return torus_word(self.p, self.q)


def torus_word(p: int, q: int) -> BraidWord:
    """(a_1 ⋯ a_{p-1})^q on p strands."""
    return BraidWord.positive(p, [i for _ in range(q) for i in range(1, p)])


@lru_cache(maxsize=None)
def _sigma(p: int, q: int) -> int:
    if p < q:
        p, q = q, p
    if q == 1:
        return 0
    if q == 2:
        return 1 - p
    odd = q % 2 == 1
    if p == q:
        return ((1 if odd else 2) - q * q) // 2
    if p == 2 * q:
        return 1 - q * q
    if p > 2 * q:
        return _sigma(p - 2 * q, q) - q * q + (1 if odd else 0)
    return -_sigma(2 * q - p, q) - q * q + (1 if odd else 2)


def sigma_torus(p: int, q: int) -> int:
    """Signature of the torus link T(p, q) for 2 <= p <= 4, q >= 1."""
    params = TorusParams(p, q)
    if params.p > MAX_ORACLE_STRANDS:
        raise ValidationError(
            f"Torus oracle supports 2 <= p <= {MAX_ORACLE_STRANDS}, got {p}",
            field="p",
        )
    return _sigma(params.p, params.q)
