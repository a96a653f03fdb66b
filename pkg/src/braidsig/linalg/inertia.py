"""Exact inertia of symmetric integer matrices.

Signature and nullity are read off a congruence diagonalization carried out
over ``fractions.Fraction``; by Sylvester's law of inertia the signs of the
diagonal entries are the signs of the eigenvalues.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import structlog

from ..utils.exceptions import ValidationError

logger = structlog.get_logger(__name__)

IntMatrix = Sequence[Sequence[int]]


def _rows(matrix: IntMatrix) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in row) for row in matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValidationError("Matrix must be square", field="matrix")
    return rows


@dataclass(frozen=True)
class SymmetricIntMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = _rows(self.entries)
        n = len(rows)
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValidationError(
                        f"Matrix is not symmetric at ({i}, {j})", field="matrix"
                    )
        object.__setattr__(self, "entries", rows)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int

    @property
    def signature(self) -> int:
        return self.positive - self.negative

    @property
    def nullity(self) -> int:
        return self.zero

    @property
    def dimension(self) -> int:
        return self.positive + self.negative + self.zero


def symmetrize(matrix: IntMatrix) -> SymmetricIntMatrix:
    """Return V + Vᵀ."""
    rows = _rows(matrix)
    n = len(rows)
    return SymmetricIntMatrix(
        tuple(tuple(rows[i][j] + rows[j][i] for j in range(n)) for i in range(n))
    )


def inertia(matrix: SymmetricIntMatrix | IntMatrix) -> Inertia:
    """Count positive, negative and zero eigenvalues exactly.

    Args:
        matrix: Symmetric integer matrix

    Returns:
        The inertia triple of the matrix
    """
    if not isinstance(matrix, SymmetricIntMatrix):
        matrix = SymmetricIntMatrix(_rows(matrix))

    a = [[Fraction(x) for x in row] for row in matrix.entries]
    active = list(range(matrix.dimension))
    positive = negative = zero = 0

    while active:
        pivot = next((k for k in active if a[k][k] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in active for j in active if i < j and a[i][j] != 0),
                None,
            )
            if pair is None:
                zero += len(active)
                break
            # row/column i += row/column j makes a[i][i] = 2 a[i][j]
            i, j = pair
            for k in active:
                a[i][k] += a[j][k]
            for k in active:
                a[k][i] += a[k][j]
            pivot = i

        d = a[pivot][pivot]
        if d > 0:
            positive += 1
        else:
            negative += 1

        rest = [k for k in active if k != pivot]
        for r in rest:
            factor = a[r][pivot] / d
            if factor:
                row_p = a[pivot]
                row_r = a[r]
                for c in rest:
                    row_r[c] -= factor * row_p[c]
        active = rest

    return Inertia(positive, negative, zero)


def signature_and_nullity(matrix: SymmetricIntMatrix | IntMatrix) -> tuple[int, int]:
    result = inertia(matrix)
    return result.signature, result.nullity


def determinant(matrix: IntMatrix) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in _rows(matrix)]
    n = len(a)
    if n == 0:
        return 1

    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
