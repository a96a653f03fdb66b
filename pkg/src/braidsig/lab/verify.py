"""Exhaustive checks of linear signature bounds on small positive braids.

Positive words on b strands using every generator (c = 1) are enumerated by
length. Only necklace representatives, the lexicographically least rotation,
are generated, since closures are invariant under cyclic shifts. Words are
merged into classes by the least normal-form string over their rotations.
The word space is split by (length, prefix) into tasks that run in a
``multiprocessing`` pool; the merge is independent of task order.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import multiprocessing as mp
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, NamedTuple

import structlog

from ..braids.garside import normal_form_key
from ..braids.words import BraidWord, cyclic_shift, format_word
from ..config import get_settings
from ..utils.exceptions import ValidationError
from ..utils.logging import init_worker_logging
from .asymptotic import format_fraction
from .invariants import signature

logger = structlog.get_logger(__name__)

PREFIX_LENGTH = 3


@dataclass(frozen=True)
class BoundFamily:
    """-σ (> or >=) bound·b1 + offset_constant + offset_per_strand·(b - 1)."""

    name: str
    bound: Fraction
    strict: bool
    offset_constant: Fraction = Fraction(0)
    offset_per_strand: Fraction = Fraction(0)
    strands: int | None = None

    def offset(self, b: int) -> Fraction:
        return self.offset_constant + self.offset_per_strand * (b - 1)


BOUND_FAMILIES: dict[str, BoundFamily] = {
    family.name: family
    for family in (
        BoundFamily("conjecture", Fraction(1, 2), strict=True),
        BoundFamily("proposition", Fraction(1, 3), strict=True, strands=4),
        BoundFamily("improved", Fraction(1, 3) + Fraction(1, 75), strict=False, strands=4),
        BoundFamily(
            "corollary-5-12",
            Fraction(5, 12),
            strict=False,
            offset_constant=Fraction(-7, 4),
            strands=4,
        ),
        BoundFamily(
            "corollary-1-16",
            Fraction(1, 16),
            strict=False,
            offset_per_strand=Fraction(-15, 16),
        ),
    )
}


class EnumeratedClass(NamedTuple):
    key: str
    word: tuple[int, ...]
    b1: int
    sigma: int


class Counterexample(NamedTuple):
    word: str
    length: int
    b1: int
    sigma: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(-self.sigma, self.b1)


@dataclass(frozen=True)
class ClassEnumeration:
    b: int
    l_max: int
    words_checked: int
    classes: tuple[EnumeratedClass, ...]

    @property
    def classes_checked(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class BoundReport:
    b: int
    l_max: int
    bound: Fraction
    strict: bool
    words_checked: int
    classes_checked: int
    offset: Fraction = Fraction(0)
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict[str, Any]:
        return {
            "b": self.b,
            "l_max": self.l_max,
            "bound": format_fraction(self.bound),
            "offset": format_fraction(self.offset),
            "strict": self.strict,
            "words_checked": self.words_checked,
            "classes_checked": self.classes_checked,
            "holds": self.holds,
            "counterexamples": [
                {
                    "word": ce.word,
                    "l": ce.length,
                    "b1": ce.b1,
                    "sigma": ce.sigma,
                    "ratio": format_fraction(ce.ratio),
                }
                for ce in self.counterexamples
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["word", "l", "b1", "sigma", "ratio"])
        for ce in self.counterexamples:
            writer.writerow([ce.word, ce.length, ce.b1, ce.sigma, format_fraction(ce.ratio)])
        return buffer.getvalue()


def is_necklace(word: tuple[int, ...]) -> bool:
    """True iff ``word`` is the least of its rotations."""
    return all(word <= word[s:] + word[:s] for s in range(1, len(word)))


def rotation_count(word: tuple[int, ...]) -> int:
    """Number of distinct rotations of ``word``."""
    n = len(word)
    for period in range(1, n + 1):
        if n % period == 0 and word[period:] + word[:period] == word:
            return period
    return n


def canonical_key(word: BraidWord) -> str:
    """Least normal-form string over all cyclic shifts of ``word``."""
    if word.length == 0:
        return normal_form_key(word)
    return min(normal_form_key(cyclic_shift(word, s)) for s in range(word.length))


def _tasks(b: int, l_max: int) -> list[tuple[int, int, tuple[int, ...]]]:
    tasks = []
    # b1 = l - b + 1 > 0 needs l >= b
    for length in range(max(b, 1), l_max + 1):
        depth = min(PREFIX_LENGTH, length)
        # a necklace using generator 1 starts with it
        for tail in product(range(1, b), repeat=depth - 1):
            tasks.append((b, length, (1, *tail)))
    return tasks


def _run_task(task: tuple[int, int, tuple[int, ...]]) -> tuple[int, list[EnumeratedClass]]:
    b, length, prefix = task
    generators = set(range(1, b))
    words = 0
    found: list[EnumeratedClass] = []
    for tail in product(range(1, b), repeat=length - len(prefix)):
        indices = prefix + tail
        if set(indices) != generators or not is_necklace(indices):
            continue
        words += rotation_count(indices)
        word = BraidWord.positive(b, indices)
        found.append(
            EnumeratedClass(canonical_key(word), indices, length - b + 1, signature(word))
        )
    logger.debug("Task finished", length=length, prefix=prefix, classes=len(found))
    return words, found


def enumerate_classes(b: int, l_max: int, jobs: int | None = None) -> ClassEnumeration:
    """All non-trivial c = 1 positive b-braid classes up to length ``l_max``.

    Args:
        b: Number of strands
        l_max: Maximal word length
        jobs: Worker processes; 1 runs inline, None uses the configured default

    Returns:
        Classes sorted by (length, representative word)
    """
    settings = get_settings()
    if b < 2:
        raise ValidationError(f"Need at least 2 strands, got {b}", field="b")
    if l_max < 1:
        raise ValidationError(f"l_max must be at least 1, got {l_max}", field="l_max")
    if b > settings.max_verify_strands:
        raise ValidationError(
            f"Enumeration limited to {settings.max_verify_strands} strands", field="b"
        )
    if l_max > settings.max_verify_length:
        raise ValidationError(
            f"Enumeration limited to length {settings.max_verify_length}",
            field="l_max",
        )

    tasks = _tasks(b, l_max)
    workers = min(settings.effective_jobs(jobs), max(len(tasks), 1))
    logger.info("Enumeration started", b=b, l_max=l_max, tasks=len(tasks), jobs=workers)

    words_checked = 0
    merged: dict[str, EnumeratedClass] = {}

    def absorb(result: tuple[int, list[EnumeratedClass]]) -> None:
        nonlocal words_checked
        count, found = result
        words_checked += count
        for entry in found:
            current = merged.get(entry.key)
            if current is None or entry.word < current.word:
                merged[entry.key] = entry

    if workers <= 1:
        results = map(_run_task, tasks)
        for done, result in enumerate(results, start=1):
            absorb(result)
            _progress(done, len(tasks), settings.progress_every)
    else:
        level = logging.getLogger("braidsig").getEffectiveLevel()
        with mp.Pool(workers, initializer=init_worker_logging, initargs=(level,)) as pool:
            for done, result in enumerate(pool.imap_unordered(_run_task, tasks), start=1):
                absorb(result)
                _progress(done, len(tasks), settings.progress_every)

    classes = tuple(sorted(merged.values(), key=lambda e: (len(e.word), e.word)))
    logger.info(
        "Enumeration finished",
        b=b,
        l_max=l_max,
        words=words_checked,
        classes=len(classes),
    )
    return ClassEnumeration(b, l_max, words_checked, classes)


def _progress(done: int, total: int, every: int) -> None:
    if done % every == 0 or done == total:
        logger.info("Enumeration progress", done=done, total=total)


def check_bound(
    enumeration: ClassEnumeration,
    bound: Fraction,
    strict: bool,
    offset: Fraction = Fraction(0),
) -> BoundReport:
    """Check -σ (> or >=) bound·b1 + offset on every enumerated class."""
    bound, offset = Fraction(bound), Fraction(offset)
    counterexamples = []
    for entry in enumeration.classes:
        lhs = -entry.sigma
        rhs = bound * entry.b1 + offset
        ok = lhs > rhs if strict else lhs >= rhs
        if not ok:
            counterexamples.append(
                Counterexample(
                    format_word(BraidWord.positive(enumeration.b, entry.word)),
                    len(entry.word),
                    entry.b1,
                    entry.sigma,
                )
            )

    report = BoundReport(
        b=enumeration.b,
        l_max=enumeration.l_max,
        bound=bound,
        strict=strict,
        words_checked=enumeration.words_checked,
        classes_checked=enumeration.classes_checked,
        offset=offset,
        counterexamples=counterexamples,
    )
    if counterexamples:
        logger.warning(
            "Bound violated",
            bound=format_fraction(bound),
            strict=strict,
            counterexamples=len(counterexamples),
        )
    return report


def verify_bound(
    b: int,
    l_max: int,
    bound: Fraction,
    strict: bool,
    offset: Fraction = Fraction(0),
    jobs: int | None = None,
) -> BoundReport:
    """Enumerate and check one bound; see :func:`check_bound`."""
    return check_bound(enumerate_classes(b, l_max, jobs), bound, strict, offset)
