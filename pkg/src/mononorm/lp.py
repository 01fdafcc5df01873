"""Exact linear programming over the rationals.

Only the standard form is supported::

    minimize  c.x   subject to  A x = b,  x >= 0

Everything else in the package (membership, redundancy, pointedness) is
phrased in this form. Dense tableau, two phases, Bland's rule, so it always
terminates; sizes here stay in the low hundreds of columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Number = int | Fraction


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: Optional[list[Fraction]] = None
    value: Optional[Fraction] = None


def _pivot(T: list[list[Fraction]], r: int, c: int) -> None:
    row = T[r]
    p = row[c]
    if p != 1:
        inv = 1 / p
        T[r] = row = [v * inv for v in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [a - f * b for a, b in zip(other, row)]


def _run(T: list[list[Fraction]], basis: list[int], ncols: int) -> bool:
    """Iterate on tableau T whose last row is the reduced cost row.

    Columns 0..ncols-1 are eligible to enter. Returns False if unbounded.
    """
    m = len(basis)
    obj = T[m]
    while True:
        obj = T[m]
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            return True
        best = None
        leave = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return False
        _pivot(T, leave, enter)
        basis[leave] = enter


def solve(c: Sequence[Number], A: Sequence[Sequence[Number]], b: Sequence[Number]) -> LPResult:
    """Minimize c.x subject to A x = b, x >= 0, exactly."""
    m = len(A)
    n = len(c)
    rows = []
    for i in range(m):
        if len(A[i]) != n:
            raise ValueError("constraint row length does not match objective")
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append(row + [rhs])

    # phase 1: artificial variables n..n+m-1
    T = []
    for i, row in enumerate(rows):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(row[:-1] + art + [row[-1]])
    cost = [Fraction(0)] * (n + m + 1)
    for row in T:
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    T.append(cost)
    basis = list(range(n, n + m))
    _run(T, basis, n + m)
    if T[m][-1] != 0:
        return LPResult("infeasible")

    # drive remaining artificials out of the basis; drop redundant rows
    i = 0
    while i < len(basis):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, i, col)
            basis[i] = col
        i += 1
    m = len(basis)
    T = [row[:n] + [row[-1]] for row in T[:m]]

    # phase 2
    obj = [Fraction(v) for v in c] + [Fraction(0)]
    for i, bj in enumerate(basis):
        f = obj[bj]
        if f:
            obj = [a - f * r for a, r in zip(obj, T[i])]
    T.append(obj)
    if not _run(T, basis, n):
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        x[bj] = T[i][-1]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", x, value)


def feasible(A: Sequence[Sequence[Number]], b: Sequence[Number]) -> Optional[list[Fraction]]:
    """A point x >= 0 with A x = b, or None."""
    n = len(A[0]) if A else 0
    res = solve([0] * n, A, b)
    return res.x if res.status == "optimal" else None
