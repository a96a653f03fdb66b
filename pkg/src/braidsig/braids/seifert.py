"""Seifert matrices of positive braid closures from the brick basis.

Consecutive bars in the same column of a fence diagram bound a brick; the
bricks' boundary cycles form a basis of the first homology of the fiber
surface. Linking numbers between a brick cycle and the push-off of another:

* every brick links its own push-off with -1;
* a brick links the push-off of the brick directly above it in the same
  column with +1 (the reverse slot is 0);
* bricks in adjacent columns whose time intervals strictly interleave link
  only in the row of the left-column brick: for ``y`` one column right of
  ``x``, ``V[x][y] = +1`` when ``x`` starts first and ``-1`` when ``y``
  starts first (the slot ``V[y][x]`` is 0);
* nested and disjoint bricks do not link.

The surface is a fiber, so ``det V = ±1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, NamedTuple

from ..linalg.inertia import SymmetricIntMatrix, determinant, symmetrize
from .fence import FenceDiagram, fence_diagram
from .words import BraidWord


class Brick(NamedTuple):
    column: int
    lower_time: int
    upper_time: int
    rank: int = 1

    @property
    def label(self) -> str:
        return f"({self.column}, {self.rank})"


@dataclass(frozen=True)
class SeifertMatrix:
    basis: tuple[Brick, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def symmetrized(self) -> SymmetricIntMatrix:
        return symmetrize(self.entries)

    def determinant(self) -> int:
        return determinant(self.entries)

    def to_dict(self) -> dict[str, Any]:
        return {
            "basis": [brick.label for brick in self.basis],
            "matrix": [list(row) for row in self.entries],
        }


def brick_basis(fd: FenceDiagram) -> tuple[Brick, ...]:
    """Bricks between consecutive bars of each column, ordered by lower time."""
    bricks: list[Brick] = []
    for column in range(1, fd.strands):
        times = fd.occurrences(column)
        for rank, (lower, upper) in enumerate(zip(times, times[1:]), start=1):
            bricks.append(Brick(column, lower, upper, rank))
    bricks.sort(key=lambda brick: brick.lower_time)
    return tuple(bricks)


def _linking(x: Brick, y: Brick) -> int:
    if x == y:
        return -1
    if x.column == y.column:
        return 1 if x.upper_time == y.lower_time else 0
    if y.column != x.column + 1:
        return 0
    if x.lower_time < y.lower_time < x.upper_time < y.upper_time:
        return 1
    if y.lower_time < x.lower_time < y.upper_time < x.upper_time:
        return -1
    return 0


def seifert_matrix(word: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the closure of a positive word in the brick basis."""
    basis = brick_basis(fence_diagram(word))
    entries = tuple(tuple(_linking(x, y) for y in basis) for x in basis)
    return SeifertMatrix(basis, entries)
