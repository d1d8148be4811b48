"""Exact rational linear algebra over ``fractions.Fraction``.

Only what the firing code needs: reduced row echelon form, span bookkeeping
and solving square integer systems.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = tuple[Fraction, ...]


def rref(rows: Iterable[Sequence]) -> tuple[Row, ...]:
    """Reduced row echelon form of ``rows`` with zero rows dropped.

    The result is canonical: two row lists span the same space iff their
    ``rref`` values are equal.
    """
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(mat)) if mat[r][col] != 0), None)
        if pr is None:
            continue
        mat[pivot_row], mat[pr] = mat[pr], mat[pivot_row]
        piv = mat[pivot_row][col]
        if piv != 1:
            mat[pivot_row] = [x / piv for x in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return tuple(tuple(r) for r in mat[:pivot_row])


def solve(matrix: Sequence[Sequence[int]], rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve ``matrix @ x = rhs`` for a square nonsingular ``matrix``."""
    n = len(matrix)
    aug = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    red = rref(aug)
    if len(red) != n or any(red[i][i] != 1 for i in range(n)):
        raise ValueError("singular system")
    return tuple(red[i][n] for i in range(n))


def determinant(matrix: Sequence[Sequence[int]]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def inverse(matrix: Sequence[Sequence[int]]) -> tuple[Row, ...]:
    n = len(matrix)
    aug = [list(matrix[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    red = rref(aug)
    if len(red) != n:
        raise ValueError("singular matrix")
    return tuple(tuple(r[n:]) for r in red)
