"""Independent second implementations used only as test oracles."""

from collections import deque
from fractions import Fraction


def bareiss_det(matrix: list[list[int]]) -> int:
    """Integer determinant by fraction-free elimination with row pivoting."""
    a = [row[:] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def characteristic_polynomial(matrix: list[list[int]]) -> list[int]:
    """Coefficients of det(xI - M), constant term first.

    Evaluates the determinant at x = 0..n and interpolates.
    """
    n = len(matrix)
    points = list(range(n + 1))
    values = []
    for x in points:
        shifted = [
            [(x if i == j else 0) - matrix[i][j] for j in range(n)] for i in range(n)
        ]
        values.append(bareiss_det(shifted))

    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            # multiply basis by (x - xj)
            basis = [Fraction(0), *basis]
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, c in enumerate(basis):
            coeffs[k] += values[i] * c / denom

    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def _sign_changes(coeffs: list[int]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def descartes_inertia(matrix: list[list[int]]) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric matrix.

    All roots of the characteristic polynomial are real, so Descartes' rule
    of signs is exact.
    """
    coeffs = characteristic_polynomial(matrix)
    zero = next(k for k, c in enumerate(coeffs) if c != 0)
    positive = _sign_changes(coeffs)
    negative = _sign_changes([c if k % 2 == 0 else -c for k, c in enumerate(coeffs)])
    return positive, negative, zero


def rewriting_class(indices: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """Positive words reachable by commutation and braid relations."""
    seen = {indices}
    queue = deque([indices])
    while queue:
        w = queue.popleft()
        neighbours = []
        for k in range(len(w) - 1):
            if abs(w[k] - w[k + 1]) > 1:
                neighbours.append(w[:k] + (w[k + 1], w[k]) + w[k + 2 :])
        for k in range(len(w) - 2):
            if w[k] == w[k + 2] and abs(w[k] - w[k + 1]) == 1:
                neighbours.append(w[:k] + (w[k + 1], w[k], w[k + 1]) + w[k + 3 :])
        for nxt in neighbours:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def _interpolate(values: list[int]) -> list[int]:
    """Integer coefficients of the polynomial taking values[x] at x = 0, 1, ..."""
    points = range(len(values))
    coeffs = [Fraction(0)] * len(values)
    for i in points:
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in points:
            if j == i:
                continue
            basis = [Fraction(0), *basis]
            for k in range(len(basis) - 1):
                basis[k] -= j * basis[k + 1]
            denom *= i - j
        for k, c in enumerate(basis):
            coeffs[k] += values[i] * c / denom
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def alexander_polynomial(seifert: list[list[int]]) -> tuple[int, ...]:
    """det(V - tV^T), constant term first, normalized up to ±t^k.

    Leading and trailing zero coefficients are stripped and the sign is
    chosen so the lowest coefficient is positive.
    """
    n = len(seifert)
    values = [
        bareiss_det(
            [[seifert[i][j] - t * seifert[j][i] for j in range(n)] for i in range(n)]
        )
        for t in range(n + 1)
    ]
    coeffs = _interpolate(values)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if coeffs and coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(coeffs)
