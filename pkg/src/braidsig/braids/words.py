"""Braid words: parsing, formatting and structural operations.

Letters are 1-indexed, ``a<k>`` is the positive generator crossing strands
``k`` and ``k+1`` and ``A<k>`` its inverse. The empty word is allowed on any
number of strands and closes up to the unlink.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any, NamedTuple

from ..utils.exceptions import (
    NotPositiveError,
    StrandMismatchError,
    ValidationError,
    WordParseError,
)

_TOKEN = re.compile(r"^(?:(?P<gen>[aA])(?P<idx>\d+)|(?P<int>[+-]?\d+))$")


class Letter(NamedTuple):
    """A generator a_index raised to sign (+1 or -1)."""

    index: int
    sign: int = 1

    def inverted(self) -> Letter:
        return Letter(self.index, -self.sign)


@dataclass(frozen=True)
class BraidWord:
    """Strand count plus an ordered sequence of generator letters."""

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValidationError(
                f"Strand count must be at least 1, got {self.strands}",
                field="strands",
            )
        letters = tuple(Letter(int(i), int(s)) for i, s in self.letters)
        for letter in letters:
            if not 1 <= letter.index <= self.strands - 1:
                raise ValidationError(
                    f"Generator index {letter.index} out of range for "
                    f"{self.strands} strands",
                    field="letters",
                )
            if letter.sign not in (1, -1):
                raise ValidationError(
                    f"Letter sign must be +1 or -1, got {letter.sign}",
                    field="letters",
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def positive(cls, strands: int, indices: Iterable[int]) -> BraidWord:
        """Build a positive word from generator indices."""
        return cls(strands, tuple(Letter(i, 1) for i in indices))

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def is_positive(self) -> bool:
        return all(letter.sign == 1 for letter in self.letters)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(letter.index for letter in self.letters)

    def generator_counts(self) -> dict[int, int]:
        """Occurrences of each generator index, zero for unused ones."""
        counts = Counter(self.indices)
        return {k: counts.get(k, 0) for k in range(1, self.strands)}

    def to_dict(self) -> dict[str, Any]:
        return {
            "strands": self.strands,
            "letters": [[letter.index, letter.sign] for letter in self.letters],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BraidWord:
        try:
            strands = int(data["strands"])
            letters = tuple(Letter(int(i), int(s)) for i, s in data["letters"])
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"Malformed braid word data: {e}", field="data")
        return cls(strands, letters)

    def __str__(self) -> str:
        return format_word(self)

    def __len__(self) -> int:
        return len(self.letters)


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated ``a<k>``/``A<k>`` or signed-integer tokens.

    Args:
        text: Word text, e.g. ``"a1 a2 A1"`` or ``"1 2 -1"``
        strands: Number of strands b

    Returns:
        The parsed braid word

    Raises:
        WordParseError: On a malformed token or an index outside [1, b-1]
    """
    if strands < 1:
        raise ValidationError(
            f"Strand count must be at least 1, got {strands}", field="strands"
        )

    letters: list[Letter] = []
    for token in text.replace(",", " ").split():
        match = _TOKEN.match(token)
        if match is None:
            raise WordParseError(f"Malformed token {token!r}", token=token)
        if match.group("gen"):
            index = int(match.group("idx"))
            sign = 1 if match.group("gen") == "a" else -1
        else:
            value = int(match.group("int"))
            index, sign = abs(value), (1 if value > 0 else -1)
        if not 1 <= index <= strands - 1:
            raise WordParseError(
                f"Generator index {index} in {token!r} out of range for "
                f"{strands} strands",
                token=token,
            )
        letters.append(Letter(index, sign))

    return BraidWord(strands, tuple(letters))


def format_word(word: BraidWord) -> str:
    """Inverse of :func:`parse_word` in the ``a<k>``/``A<k>`` format."""
    return " ".join(
        f"{'a' if letter.sign > 0 else 'A'}{letter.index}" for letter in word.letters
    )


def require_positive(word: BraidWord) -> BraidWord:
    if not word.is_positive:
        raise NotPositiveError(
            f"Positive braid word required, got {format_word(word)!r}"
        )
    return word


def _check_strands(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise StrandMismatchError(u.strands, v.strands)


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    _check_strands(u, v)
    return BraidWord(u.strands, u.letters + v.letters)


def power(u: BraidWord, n: int) -> BraidWord:
    if n < 0:
        raise ValidationError(f"Power must be non-negative, got {n}", field="n")
    return BraidWord(u.strands, u.letters * n)


def cyclic_shift(word: BraidWord, k: int) -> BraidWord:
    """Rotate the letter sequence left by ``k``; the closure is unchanged."""
    if not 0 <= k <= word.length:
        raise ValidationError(
            f"Shift {k} outside [0, {word.length}]", field="k"
        )
    return BraidWord(word.strands, word.letters[k:] + word.letters[:k])


def rotate180(word: BraidWord) -> BraidWord:
    """Planar rotation by 180 degrees: reverse the word, map a_i to a_{b-i}."""
    b = word.strands
    return BraidWord(
        b, tuple(Letter(b - letter.index, letter.sign) for letter in reversed(word.letters))
    )


def inverse(word: BraidWord) -> BraidWord:
    return BraidWord(
        word.strands, tuple(letter.inverted() for letter in reversed(word.letters))
    )
