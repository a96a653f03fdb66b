"""Garside left normal form and the braid word problem.

A permutation braid is stored as a tuple ``perm`` of length b where
``perm[p]`` is the top position (0-based) of the strand that ends at bottom
position ``p``. With this convention the product of ``x`` on top of ``y`` is
``p -> x[y[p]]`` and the generator a_i swaps entries ``i-1`` and ``i``.

Every braid has a unique left normal form Δ^inf · x_1 ⋯ x_r where each x_j is
a permutation braid different from 1 and Δ and every pair x_j x_{j+1} is
left-weighted: the starting set of x_{j+1} is contained in the finishing set
of x_j.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

import structlog

from ..utils.exceptions import StrandMismatchError, ValidationError
from .words import BraidWord, Letter, inverse, power

logger = structlog.get_logger(__name__)

Perm = tuple[int, ...]


def _identity(b: int) -> Perm:
    return tuple(range(b))


def _delta(b: int) -> Perm:
    return tuple(range(b - 1, -1, -1))


def _swap_positions(perm: Perm, i: int) -> Perm:
    arr = list(perm)
    arr[i - 1], arr[i] = arr[i], arr[i - 1]
    return tuple(arr)


def _swap_values(perm: Perm, i: int) -> Perm:
    lo, hi = i - 1, i
    return tuple(hi if v == lo else lo if v == hi else v for v in perm)


def _finishing(perm: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(perm)) if perm[i - 1] > perm[i])


def _starting(perm: Perm) -> frozenset[int]:
    where = [0] * len(perm)
    for p, strand in enumerate(perm):
        where[strand] = p
    return frozenset(i for i in range(1, len(perm)) if where[i - 1] > where[i])


def _tau(perm: Perm) -> Perm:
    """Conjugation by Δ, sending a_i to a_{b-i}."""
    n = len(perm)
    return tuple(n - 1 - perm[n - 1 - p] for p in range(n))


def _perm_word(perm: Perm) -> tuple[int, ...]:
    """A positive word for a permutation braid, peeled off from the right."""
    out: list[int] = []
    current = perm
    while True:
        ends = _finishing(current)
        if not ends:
            break
        i = min(ends)
        out.append(i)
        current = _swap_positions(current, i)
    return tuple(reversed(out))


@lru_cache(maxsize=None)
def _left_weight(top: Perm, bottom: Perm) -> tuple[Perm, Perm]:
    """Slide generators from ``bottom`` into ``top`` until the pair is left-weighted."""
    while True:
        movable = _starting(bottom) - _finishing(top)
        if not movable:
            return top, bottom
        i = min(movable)
        top = _swap_positions(top, i)
        bottom = _swap_values(bottom, i)


@dataclass(frozen=True)
class PermutationBraid:
    """Positive braid in which every pair of strands crosses at most once."""

    perm: Perm

    @property
    def strands(self) -> int:
        return len(self.perm)

    @classmethod
    def from_word(cls, word: BraidWord) -> PermutationBraid:
        perm = _identity(word.strands)
        for letter in word.letters:
            if letter.sign < 0 or perm[letter.index - 1] > perm[letter.index]:
                raise ValidationError(
                    f"{word} is not a permutation braid", field="word"
                )
            perm = _swap_positions(perm, letter.index)
        return cls(perm)

    def finishing_set(self) -> frozenset[int]:
        """Generators a_i that can end a positive word for this braid."""
        return _finishing(self.perm)

    def starting_set(self) -> frozenset[int]:
        """Generators a_i that can begin a positive word for this braid."""
        return _starting(self.perm)

    def word(self) -> BraidWord:
        return BraidWord.positive(self.strands, _perm_word(self.perm))

    def one_line(self) -> str:
        sep = "" if self.strands <= 9 else ","
        return sep.join(str(v + 1) for v in self.perm)

    @property
    def is_identity(self) -> bool:
        return self.perm == _identity(self.strands)

    @property
    def is_delta(self) -> bool:
        return self.perm == _delta(self.strands)


@dataclass(frozen=True)
class NormalForm:
    """Left normal form Δ^inf · factors."""

    strands: int
    inf: int
    factors: tuple[PermutationBraid, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def canonical_string(self) -> str:
        parts = [f"Δ^{self.inf}", *(f.one_line() for f in self.factors)]
        return " | ".join(parts)

    def to_word(self) -> BraidWord:
        """A braid word for this normal form, Δ powers first."""
        delta = half_twist(self.strands) if self.strands >= 2 else BraidWord(1)
        if self.inf >= 0:
            prefix = power(delta, self.inf)
        else:
            prefix = power(inverse(delta), -self.inf)
        letters = list(prefix.letters)
        for factor in self.factors:
            letters.extend(factor.word().letters)
        return BraidWord(self.strands, tuple(letters))

    def __str__(self) -> str:
        return self.canonical_string()


def half_twist(b: int) -> BraidWord:
    """Positive half twist Δ_b = (a_1 ⋯ a_{b-1})(a_1 ⋯ a_{b-2}) ⋯ (a_1)."""
    if b < 2:
        raise ValidationError(f"Half twist needs at least 2 strands, got {b}", field="b")
    indices = [i for top in range(b - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord.positive(b, indices)


def _append(factors: list[Perm], simple: Perm) -> None:
    """Right-multiply a left-weighted factor list by a simple element."""
    factors.append(simple)
    for j in range(len(factors) - 1, 0, -1):
        pair = _left_weight(factors[j - 1], factors[j])
        if pair == (factors[j - 1], factors[j]):
            break
        factors[j - 1], factors[j] = pair


@lru_cache(maxsize=1 << 16)
def _normal_form(strands: int, letters: tuple[Letter, ...]) -> tuple[int, tuple[Perm, ...]]:
    identity, delta = _identity(strands), _delta(strands)
    inf = 0
    factors: list[Perm] = []

    for letter in letters:
        if letter.sign > 0:
            _append(factors, _swap_positions(identity, letter.index))
        else:
            # a_i^-1 = Δ^-1 · (Δ a_i^-1); move Δ^-1 to the front
            inf -= 1
            factors = [_tau(f) for f in factors]
            _append(factors, _swap_positions(delta, letter.index))

        while factors and factors[-1] == identity:
            factors.pop()
        while factors and factors[0] == delta:
            factors.pop(0)
            inf += 1

    return inf, tuple(factors)


def normal_form(word: BraidWord) -> NormalForm:
    """Left normal form of a braid word; signed letters allowed."""
    inf, factors = _normal_form(word.strands, word.letters)
    return NormalForm(word.strands, inf, tuple(PermutationBraid(f) for f in factors))


def normal_form_key(word: BraidWord) -> str:
    return normal_form(word).canonical_string()


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    """True iff ``u`` and ``v`` represent the same element of B_b."""
    if u.strands != v.strands:
        raise StrandMismatchError(u.strands, v.strands)
    return _normal_form(u.strands, u.letters) == _normal_form(v.strands, v.letters)


def _one_step_rewrites(w: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for k in range(len(w) - 1):
        x, y = w[k], w[k + 1]
        if abs(x - y) >= 2:
            yield w[:k] + (y, x) + w[k + 2 :]
    for k in range(len(w) - 2):
        x, y, z = w[k : k + 3]
        if x == z and abs(x - y) == 1:
            yield w[:k] + (y, x, y) + w[k + 3 :]


@lru_cache(maxsize=4096)
def rewrite_orbit(indices: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """All positive index sequences reachable from ``indices`` by braid relations."""
    seen = {indices}
    queue = deque([indices])
    while queue:
        current = queue.popleft()
        for nxt in _one_step_rewrites(current):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def positive_rewrites(word: BraidWord) -> list[BraidWord]:
    """Every positive word equal to ``word`` in the braid monoid, sorted."""
    if not word.is_positive:
        raise ValidationError("Rewriting requires a positive word", field="word")
    orbit = rewrite_orbit(word.indices)
    logger.debug("Rewrite orbit computed", word=str(word), size=len(orbit))
    return [BraidWord.positive(word.strands, w) for w in sorted(orbit)]
