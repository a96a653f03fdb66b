"""Completion of length-4 positive 4-braid blocks to Δ, L or R.

Every positive 4-braid word of length 4 other than a2 a1 a1 a2 and
a2 a3 a3 a2 becomes Δ = a1 a3 a2 a1 a3 a2, L = a1 a2 a3 a1 a2 a3 or
R = a3 a2 a1 a3 a2 a1 after adding two generators. Adding a generator means
choosing some positive word for the braid and inserting a letter into it, so
each insertion may be preceded by braid relations.

The search runs backwards once: deleting a letter from every positive word of
a target gives every length-5 braid one insertion away from it, and repeating
the deletion on those gives every completable length-4 braid. Results are
keyed by normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, NamedTuple

import structlog

from ..braids.garside import normal_form_key, rewrite_orbit
from ..braids.words import BraidWord, format_word, parse_word, require_positive
from ..utils.exceptions import ValidationError

logger = structlog.get_logger(__name__)

BLOCK_STRANDS = 4
BLOCK_LENGTH = 4

TARGETS: dict[str, BraidWord] = {
    "L": parse_word("a1 a2 a3 a1 a2 a3", 4),
    "R": parse_word("a3 a2 a1 a3 a2 a1", 4),
    "Δ": parse_word("a1 a3 a2 a1 a3 a2", 4),
}

EXCEPTIONAL_BLOCKS: tuple[BraidWord, ...] = (
    parse_word("a2 a1 a1 a2", 4),
    parse_word("a2 a3 a3 a2", 4),
)


class Insertion(NamedTuple):
    """Insert a_generator so that it becomes the letter at ``position`` (0-based)."""

    position: int
    generator: int

    def apply(self, word: BraidWord) -> BraidWord:
        indices = list(word.indices)
        indices.insert(self.position, self.generator)
        return BraidWord.positive(word.strands, indices)


@dataclass(frozen=True)
class BlockCompletion:
    """How a block reaches a target, or ``target is None`` for exceptional blocks.

    ``rewrites[j]`` is the positive word the j-th insertion is applied to; it
    is braid-equal to the block (j = 0) or to the result of the first
    insertion (j = 1).
    """

    block: BraidWord
    insertions: tuple[Insertion, Insertion] | None = None
    rewrites: tuple[BraidWord, BraidWord] | None = None
    completed: BraidWord | None = None
    target: str | None = None

    @property
    def is_exceptional(self) -> bool:
        return self.target is None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "block": format_word(self.block),
            "target": self.target,
            "insertions": None,
            "rewrites": None,
            "completed": None,
        }
        if self.insertions is not None and self.rewrites is not None:
            data["insertions"] = [list(ins) for ins in self.insertions]
            data["rewrites"] = [format_word(w) for w in self.rewrites]
        if self.completed is not None:
            data["completed"] = format_word(self.completed)
        return data


class _Step(NamedTuple):
    before: tuple[int, ...]
    insertion: Insertion
    after_key: str


def _delete_each(word: tuple[int, ...]) -> list[tuple[tuple[int, ...], Insertion]]:
    return [
        (word[:p] + word[p + 1 :], Insertion(p, word[p])) for p in range(len(word))
    ]


def _key(indices: tuple[int, ...]) -> str:
    return normal_form_key(BraidWord.positive(BLOCK_STRANDS, indices))


@lru_cache(maxsize=1)
def completion_table() -> tuple[dict[str, _Step], dict[str, tuple[_Step, str]]]:
    """Backward search tables for one and two insertions.

    Returns:
        ``(four, five)``: ``four`` maps the key of a length-4 braid to the
        first insertion step, ``five`` maps the key of a length-5 braid to the
        second insertion step and the target name. First hit wins, with
        targets in the order L, R, Δ and words in sorted order.
    """
    five: dict[str, tuple[_Step, str]] = {}
    for name, target in TARGETS.items():
        target_key = normal_form_key(target)
        for word in sorted(rewrite_orbit(target.indices)):
            for shorter, insertion in _delete_each(word):
                key = _key(shorter)
                if key not in five:
                    five[key] = (_Step(shorter, insertion, target_key), name)

    four: dict[str, _Step] = {}
    for key5, (step5, _) in five.items():
        for word in sorted(rewrite_orbit(step5.before)):
            for shorter, insertion in _delete_each(word):
                key = _key(shorter)
                if key not in four:
                    four[key] = _Step(shorter, insertion, key5)

    logger.debug("Completion table built", length5=len(five), length4=len(four))
    return four, five


def _check_block(block: BraidWord) -> None:
    require_positive(block)
    if block.strands != BLOCK_STRANDS or block.length != BLOCK_LENGTH:
        raise ValidationError(
            f"Block must be a length-{BLOCK_LENGTH} word on {BLOCK_STRANDS} strands, "
            f"got length {block.length} on {block.strands} strands",
            field="block",
        )


def is_exceptional(block: BraidWord) -> bool:
    _check_block(block)
    key = normal_form_key(block)
    return any(key == normal_form_key(e) for e in EXCEPTIONAL_BLOCKS)


def complete_block(block: BraidWord) -> BlockCompletion:
    """Two insertions taking ``block`` to Δ, L or R, if there are any."""
    if is_exceptional(block):
        return BlockCompletion(block)

    four, five = completion_table()
    step4 = four.get(normal_form_key(block))
    if step4 is None:
        logger.warning("Block has no completion", block=str(block))
        return BlockCompletion(block)

    step5, target = five[step4.after_key]
    first = BraidWord.positive(BLOCK_STRANDS, step4.before)
    second = BraidWord.positive(BLOCK_STRANDS, step5.before)
    completed = step5.insertion.apply(second)
    return BlockCompletion(
        block=block,
        insertions=(step4.insertion, step5.insertion),
        rewrites=(first, second),
        completed=completed,
        target=target,
    )
