"""Exact rank of an integer or rational matrix by Gaussian elimination."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def exact_rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank over the rationals; never touches floating point."""
    mat = [[Fraction(v) for v in row] for row in rows]
    if not mat:
        return 0
    m, n = len(mat), len(mat[0])
    rank = 0
    col = 0
    while rank < m and col < n:
        pivot = next((i for i in range(rank, m) if mat[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, m):
            if mat[i][col] != 0:
                f = mat[i][col] / pv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank
