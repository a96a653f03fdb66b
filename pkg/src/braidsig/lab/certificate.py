"""Signature certificate for powers of positive 4-braids.

βⁿ is cut into length-4 blocks B_1 ⋯ B_m with m = nl/4. Every block that is
not exceptional is replaced by the Δ, L or R it completes to, giving β̃ⁿ.
Each of Δ, L and R times its 180° rotation is the central full twist Δ², so
β̃ⁿ (β̃ⁿ)^rot collapses to a product of full twists and exceptional pieces
and its signature is at most -(2k + 8(m - k) - 1), where k counts the
exceptional blocks. One of βⁿ and its shifts by one and two letters has
k <= nl/12.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import structlog

from ..braids.words import (
    BraidWord,
    concat,
    cyclic_shift,
    format_word,
    power,
    require_positive,
    rotate180,
)
from ..utils.exceptions import PreconditionError
from .asymptotic import format_fraction
from .blocks import BLOCK_LENGTH, TARGETS, complete_block, is_exceptional
from .invariants import signature

logger = structlog.get_logger(__name__)

MAX_SHIFT = 2


@dataclass(frozen=True)
class Certificate:
    word: BraidWord
    n: int
    k: int
    shift_used: int
    blocks: int
    tilde_word: BraidWord
    measured: int
    required: int
    sigma_power: int
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.measured >= self.required

    @property
    def power_holds(self) -> bool:
        return -self.sigma_power >= self.bound

    def to_dict(self) -> dict[str, Any]:
        return {
            "word": format_word(self.word),
            "n": self.n,
            "k": self.k,
            "shift_used": self.shift_used,
            "blocks": self.blocks,
            "tilde_word": format_word(self.tilde_word),
            "measured": self.measured,
            "required": self.required,
            "holds": self.holds,
            "sigma_power": self.sigma_power,
            "bound": format_fraction(self.bound),
            "power_holds": self.power_holds,
        }


def split_blocks(word: BraidWord) -> list[BraidWord]:
    if word.length % BLOCK_LENGTH:
        raise PreconditionError(
            f"Word length {word.length} is not a multiple of {BLOCK_LENGTH}"
        )
    return [
        BraidWord(word.strands, word.letters[j : j + BLOCK_LENGTH])
        for j in range(0, word.length, BLOCK_LENGTH)
    ]


def count_exceptional(word: BraidWord) -> int:
    return sum(1 for block in split_blocks(word) if is_exceptional(block))


def tilde_word(word: BraidWord) -> BraidWord:
    """Replace every completable block by its target word."""
    letters = []
    for block in split_blocks(word):
        completion = complete_block(block)
        if completion.target is None:
            letters.extend(block.letters)
        else:
            letters.extend(TARGETS[completion.target].letters)
    return BraidWord(word.strands, tuple(letters))


def main_prop_certificate(word: BraidWord, n: int) -> Certificate:
    """Build β̃ⁿ and check -σ(β̃ⁿ (β̃ⁿ)^rot) >= 2k + 8(m - k) - 1.

    Args:
        word: Non-empty positive word on 4 strands
        n: Power, a positive multiple of 4

    Returns:
        The certificate, including -σ(βⁿ) against 5nl/12 - 2
    """
    require_positive(word)
    if word.strands != 4:
        raise PreconditionError(f"Certificate needs a 4-braid, got {word.strands} strands")
    if word.length == 0:
        raise PreconditionError("Certificate needs a non-empty word")
    if n <= 0 or n % 4:
        raise PreconditionError(f"Power n must be a positive multiple of 4, got {n}")

    base = power(word, n)
    total = base.length
    candidates = [cyclic_shift(base, s) for s in range(MAX_SHIFT + 1)]
    counts = [count_exceptional(c) for c in candidates]

    shift = next((s for s, k in enumerate(counts) if 12 * k <= total), None)
    if shift is None:
        shift = min(range(len(counts)), key=counts.__getitem__)
        logger.warning("No shift with k <= nl/12", counts=counts, shift=shift)
    k = counts[shift]
    m = total // BLOCK_LENGTH

    tilde = tilde_word(candidates[shift])
    measured = -signature(concat(tilde, rotate180(tilde)))
    required = 2 * k + 8 * (m - k) - 1
    sigma_power = signature(base)
    bound = Fraction(5 * total, 12) - 2

    logger.info(
        "Certificate computed",
        word=str(word),
        n=n,
        k=k,
        shift=shift,
        measured=measured,
        required=required,
        sigma_power=sigma_power,
    )
    return Certificate(
        word=word,
        n=n,
        k=k,
        shift_used=shift,
        blocks=m,
        tilde_word=tilde,
        measured=measured,
        required=required,
        sigma_power=sigma_power,
        bound=bound,
    )
