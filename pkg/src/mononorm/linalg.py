"""Small exact linear algebra over Fractions (row-major lists)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def _fr(M: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in M]


def row_echelon(M: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = _fr(M)
    pivots = []
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(M: Sequence[Sequence]) -> int:
    if not M:
        return 0
    return len(row_echelon(M)[1])


def int_rank(M: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    A = [list(row) for row in M]
    if not A:
        return 0
    r = 0
    prev = 1
    for c in range(len(A[0])):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        for i in range(r + 1, len(A)):
            a = A[i][c]
            A[i] = [(piv * x - a * y) // prev for x, y in zip(A[i], A[r])]
        prev = piv
        r += 1
        if r == len(A):
            break
    return r


def independent_rows(M: Sequence[Sequence]) -> list[int]:
    """Greedy maximal set of linearly independent rows, in order."""
    chosen: list[int] = []
    basis: Matrix = []
    for i, row in enumerate(M):
        if rank(basis + [list(row)]) > len(basis):
            basis.append(list(row))
            chosen.append(i)
    return chosen


def det(M: Sequence[Sequence]) -> Fraction:
    A = _fr(M)
    n = len(A)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] / A[c][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return d


def inverse(M: Sequence[Sequence]) -> Matrix:
    n = len(M)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
    R, piv = row_echelon(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in R]


def nullspace_vector(M: Sequence[Sequence], ncols: int) -> list[Fraction]:
    """A nonzero vector v with M v = 0, assuming a one-dimensional kernel."""
    if not M:
        raise ValueError("kernel is not one-dimensional")
    R, piv = row_echelon(M)
    free = [c for c in range(ncols) if c not in piv]
    if len(free) != 1:
        raise ValueError("kernel is not one-dimensional")
    f = free[0]
    v = [Fraction(0)] * ncols
    v[f] = Fraction(1)
    for row, c in zip(R, piv):
        v[c] = -row[f]
    return v


def matvec(M: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def transpose(M: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*M)]
