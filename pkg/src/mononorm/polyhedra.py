"""Exact halfspace systems and Fourier-Motzkin elimination.

A row ``(normal, offset)`` encodes ``<normal, x> >= offset``. Rows handled
internally are all-integer; the public :class:`HalfspaceSystem` keeps a
primitive integer normal and a rational offset.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from . import linalg, lp

log = logging.getLogger(__name__)

IntRow = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class HalfspaceSystem:
    dim: int
    rows: tuple[tuple[tuple[int, ...], Fraction], ...]

    def satisfies(self, x: Sequence[int], scale: int = 1) -> bool:
        """x lies in scale * P."""
        return all(
            sum(l * xi for l, xi in zip(normal, x)) >= scale * off
            for normal, off in self.rows
        )

    def violated(self, x: Sequence[int], scale: int = 1) -> list[int]:
        return [
            i for i, (normal, off) in enumerate(self.rows)
            if sum(l * xi for l, xi in zip(normal, x)) < scale * off
        ]

    def mask(self, points: np.ndarray, scale: int = 1) -> np.ndarray:
        """Vectorized :meth:`satisfies` over an (N, dim) integer array."""
        ok = np.ones(points.shape[0], dtype=bool)
        pts = points.astype(np.int64)
        for normal, off in self.rows:
            lhs = pts @ np.asarray(normal, dtype=np.int64)
            # <l,x> >= scale*p/q  <=>  q*<l,x> >= scale*p
            ok &= lhs * off.denominator >= scale * off.numerator
        return ok

    def describe(self) -> list[str]:
        out = []
        for normal, off in self.rows:
            terms = []
            for i, c in enumerate(normal, start=1):
                if c == 0:
                    continue
                coef = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else "+"
                terms.append(f"{sign} {coef}x{i}")
            lhs = " ".join(terms).lstrip("+ ") or "0"
            out.append(f"{lhs} >= {off}")
        return out


def _primitive(coeffs: Sequence[int], rhs: int) -> IntRow:
    g = 0
    for v in coeffs:
        g = gcd(g, v)
    g = gcd(g, rhs)
    if g > 1:
        return tuple(v // g for v in coeffs), rhs // g
    return tuple(coeffs), rhs


def to_public(rows: Iterable[IntRow], dim: int) -> HalfspaceSystem:
    out = []
    for coeffs, rhs in rows:
        g = 0
        for v in coeffs:
            g = gcd(g, v)
        if g == 0:
            continue
        out.append((tuple(v // g for v in coeffs), Fraction(rhs, g)))
    out.sort(key=lambda r: (r[0], r[1]))
    return HalfspaceSystem(dim, tuple(out))


@dataclass
class _Row:
    coeffs: tuple[int, ...]
    rhs: int
    history: frozenset = field(default_factory=frozenset)


def _dedupe(rows: list[_Row]) -> list[_Row]:
    """Drop trivial rows; for equal normals keep the strongest offset."""
    best: dict[tuple[int, ...], _Row] = {}
    for r in rows:
        if not any(r.coeffs):
            if r.rhs > 0:
                raise ValueError("inconsistent system: 0 >= positive constant")
            continue
        cur = best.get(r.coeffs)
        if cur is None or r.rhs > cur.rhs or (r.rhs == cur.rhs and len(r.history) < len(cur.history)):
            best[r.coeffs] = r
    return list(best.values())


def is_redundant(target: IntRow, others: Sequence[IntRow]) -> bool:
    """Exact test whether ``target`` is implied by ``others``.

    Affine Farkas: for a feasible system the inequality <l,x> >= c follows
    iff some mu >= 0 gives sum mu_i l_i = l and sum mu_i c_i >= c. We
    maximize sum mu_i c_i over that set.
    """
    normal, c = target
    if not others:
        return False
    dim = len(normal)
    A = [[o[0][j] for o in others] for j in range(dim)]
    cost = [-o[1] for o in others]
    res = lp.solve(cost, A, list(normal))
    if res.status == "infeasible":
        return False
    if res.status == "unbounded":
        # the remaining rows are infeasible; cannot happen for our polyhedra
        return True
    return -res.value >= c


def remove_redundant(rows: Sequence[IntRow]) -> list[IntRow]:
    kept = list(rows)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if is_redundant(kept[i], others):
            del kept[i]
        else:
            i += 1
    return kept


Generators = tuple[Sequence[Sequence[int]], Sequence[Sequence[int]]]


def facet_filter(rows: Sequence[IntRow], points: Sequence[Sequence[int]],
                 rays: Sequence[Sequence[int]]) -> list[IntRow]:
    """Keep the rows that define facets of conv(points) + cone(rays).

    Every row must be valid for the polyhedron, which must be
    full-dimensional and pointed. A valid row is a facet iff the
    generators on which it is tight span an affine space of dimension
    dim - 1. Exact, and much cheaper than one LP per row.
    """
    out = []
    dim = len(points[0]) if points else 0
    for coeffs, rhs in rows:
        tight = [p for p in points if sum(a * b for a, b in zip(coeffs, p)) == rhs]
        if not tight:
            continue
        base = tight[0]
        vecs = [[a - b for a, b in zip(p, base)] for p in tight[1:]]
        vecs += [list(r) for r in rays if sum(a * b for a, b in zip(coeffs, r)) == 0]
        if linalg.int_rank(vecs) == dim - 1:
            out.append((coeffs, rhs))
    return out


def fourier_motzkin(rows: Sequence[IntRow], eliminate: Sequence[int], prune_every: int = 0,
                    generators: Generators | None = None) -> list[IntRow]:
    """Project away the columns in ``eliminate``; returns rows on the rest.

    Chernikov's history rule discards combinations that mix more original
    rows than the number of eliminated columns allows; it never discards
    an irredundant row. With ``prune_every > 0`` an exact LP pass runs
    whenever the row count exceeds that value.

    ``generators`` gives points and rays (in the original columns) of the
    polyhedron the rows describe, which must then be full-dimensional.
    Each intermediate projection is generated by their projections, so
    after every step only the facet rows are kept, via :func:`facet_filter`.
    """
    work = [_Row(*_primitive(c, r), frozenset([i])) for i, (c, r) in enumerate(rows)]
    work = _dedupe(work)
    todo = list(eliminate)
    done = 0
    while todo:
        # cheapest column first
        def cost(k):
            p = sum(1 for r in work if r.coeffs[k] > 0)
            n = sum(1 for r in work if r.coeffs[k] < 0)
            return p * n - p - n
        k = min(todo, key=cost)
        todo.remove(k)
        done += 1
        pos = [r for r in work if r.coeffs[k] > 0]
        neg = [r for r in work if r.coeffs[k] < 0]
        new = [r for r in work if r.coeffs[k] == 0]
        for p in pos:
            for q in neg:
                hist = p.history | q.history
                if len(hist) > done + 1:
                    continue
                a, b = -q.coeffs[k], p.coeffs[k]
                coeffs = [a * x + b * y for x, y in zip(p.coeffs, q.coeffs)]
                rhs = a * p.rhs + b * q.rhs
                new.append(_Row(*_primitive(coeffs, rhs), hist))
        work = _dedupe(new)
        log.debug("eliminated column %d: %d rows", k, len(work))
        if generators is not None:
            gone = set(eliminate) - set(todo)
            cols = [j for j in range(len(rows[0][0])) if j not in gone]
            pts = [[p[j] for j in cols] for p in generators[0]]
            rys = [[r[j] for j in cols] for r in generators[1]]
            by_key = {(tuple(r.coeffs[j] for j in cols), r.rhs): r for r in work}
            work = [by_key[key] for key in facet_filter(list(by_key), pts, rys)]
        elif prune_every and len(work) > prune_every:
            keep = set(remove_redundant([(r.coeffs, r.rhs) for r in work]))
            work = [r for r in work if (r.coeffs, r.rhs) in keep]
    keepcols = [j for j in range(len(rows[0][0])) if j not in set(eliminate)] if rows else []
    out = []
    for r in work:
        out.append(_primitive(tuple(r.coeffs[j] for j in keepcols), r.rhs))
    return [r for r in set(out) if any(r[0]) or r[1] > 0]
