"""Exact rational linear algebra on small integer matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def row_reduce(rows: Sequence[Sequence[int]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [[Fraction(x) for x in row] for row in rows]
    pivots, r = [], 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    return len(row_reduce(rows)[1])


def solve(columns: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum c_k columns[k] = target``, or None."""
    k = len(columns)
    aug = [[col[i] for col in columns] + [target[i]] for i in range(len(target))]
    M, pivots = row_reduce(aug)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, c in zip(M, pivots):
        coeffs[c] = row[-1]
    return coeffs
