"""Reduction of positive braids to connected sums on fewer strands.

For a positive b-braid with c = 1 and a target braid index b', deleting all
but the leftmost occurrence of every generator a_k with k ≡ i (mod b') leaves
a braid whose closure is a connected sum of closures of braids on at most b'
strands. One of the b' choices of i loses at most a 1/b' share of b1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import structlog

from ..braids.fence import betti_and_c
from ..braids.words import BraidWord, Letter, require_positive
from ..utils.exceptions import PreconditionError

logger = structlog.get_logger(__name__)


class Reduction(NamedTuple):
    i: int
    reduced: BraidWord
    components: list[BraidWord]

    @property
    def b1_reduced(self) -> int:
        return betti_and_c(self.reduced)[0]

    @property
    def component_b1(self) -> list[int]:
        return [betti_and_c(w)[0] for w in self.components]


def cut_generators(strands: int, b_target: int, i: int) -> frozenset[int]:
    return frozenset(k for k in range(1, strands) if k % b_target == i % b_target)


def reduce_word(word: BraidWord, cut: frozenset[int]) -> BraidWord:
    """Keep only the leftmost occurrence of each generator in ``cut``."""
    seen: set[int] = set()
    letters: list[Letter] = []
    for letter in word.letters:
        if letter.index in cut:
            if letter.index in seen:
                continue
            seen.add(letter.index)
        letters.append(letter)
    return BraidWord(word.strands, tuple(letters))


def split_components(word: BraidWord, cut: frozenset[int]) -> list[BraidWord]:
    """Sub-braids on the maximal runs of generators between cut generators."""
    runs: list[list[int]] = []
    current: list[int] = []
    for k in range(1, word.strands):
        if k in cut:
            if current:
                runs.append(current)
            current = []
        else:
            current.append(k)
    if current:
        runs.append(current)

    components = []
    for run in runs:
        first, members = run[0], set(run)
        letters = tuple(
            Letter(letter.index - first + 1, letter.sign)
            for letter in word.letters
            if letter.index in members
        )
        components.append(BraidWord(len(run) + 1, letters))
    return components


def reduction_decompose(word: BraidWord, b_target: int) -> Reduction:
    """Choose i maximizing b1 of the reduced braid, smallest i on ties.

    Raises:
        NotPositiveError: If the word has inverse letters
        PreconditionError: If b_target is outside [2, strands) or c > 1
    """
    require_positive(word)
    if not 2 <= b_target < word.strands:
        raise PreconditionError(
            f"Target braid index must satisfy 2 <= b_target < {word.strands}, "
            f"got {b_target}"
        )
    b1, c = betti_and_c(word)
    if c != 1:
        raise PreconditionError(
            f"Reduction needs a connected closure (c = 1), got c = {c}; split first"
        )

    best: Reduction | None = None
    best_b1 = -1
    for i in range(1, b_target + 1):
        cut = cut_generators(word.strands, b_target, i)
        reduced = reduce_word(word, cut)
        reduced_b1 = betti_and_c(reduced)[0]
        if reduced_b1 > best_b1:
            best = Reduction(i, reduced, split_components(reduced, cut))
            best_b1 = reduced_b1

    assert best is not None
    logger.info(
        "Braid reduced",
        strands=word.strands,
        b_target=b_target,
        i=best.i,
        b1=b1,
        b1_reduced=best_b1,
        components=len(best.components),
    )
    return best


def reduction_constant(constant: Fraction, b_target: int) -> Fraction:
    """Linear constant (C(b-1) - 1)/b inherited by all positive braids."""
    return (Fraction(constant) * (b_target - 1) - 1) / b_target
