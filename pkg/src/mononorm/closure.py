"""Integral closure of powers of monomial ideals.

Closure membership is decided on the Newton polyhedron
NP(I) = conv(G(I)) + R^n_{>=0}: x^a lies in the closure of I^d iff
a is in d * NP(I). The facet description comes from Fourier-Motzkin
elimination of the convex multipliers; :func:`member_lp` answers the same
question via an exact LP and serves as the independent check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import lp
from .monomials import (
    Exponent,
    MonomialIdeal,
    colon_ideal,
    contains_monomial_power,
    equals,
    minimalize,
    power,
)
from .polyhedra import HalfspaceSystem, facet_filter, fourier_motzkin, to_public


def _in_hull_plus_orthant(point: Sequence[int], vertices: Sequence[Sequence[int]], scale: int = 1) -> bool:
    """Exact LP: point = sum lam_i v_i + s with lam, s >= 0, sum lam = scale."""
    if not vertices:
        return False
    n = len(point)
    m = len(vertices)
    A = []
    for j in range(n):
        A.append([v[j] for v in vertices] + [1 if t == j else 0 for t in range(n)])
    A.append([1] * m + [0] * n)
    return lp.feasible(A, list(point) + [scale]) is not None


def member_lp(I: MonomialIdeal, a: Sequence[int], d: int) -> bool:
    """Closure membership by LP feasibility over the generators."""
    if I.is_zero:
        return False
    return _in_hull_plus_orthant(a, I.gens, d)


def np_vertices(I: MonomialIdeal) -> tuple[Exponent, ...]:
    """Generators that are vertices of NP(I); the others are dropped."""
    gens = list(I.gens)
    keep = []
    for k, v in enumerate(gens):
        others = gens[:k] + gens[k + 1:]
        if not _in_hull_plus_orthant(v, others):
            keep.append(v)
    return tuple(keep)


@lru_cache(maxsize=128)
def newton_polyhedron(I: MonomialIdeal) -> HalfspaceSystem:
    """Irredundant facet inequalities of conv(G(I)) + R^n_{>=0}."""
    if I.is_zero:
        raise ValueError("the zero ideal has no Newton polyhedron")
    n = I.dim
    verts = np_vertices(I)
    m = len(verts)
    last = verts[-1]
    # columns: a_1..a_n, lam_1..lam_{m-1}; lam_m = 1 - sum of the others
    rows = []
    for j in range(n):
        coeffs = [1 if t == j else 0 for t in range(n)]
        coeffs += [last[j] - verts[i][j] for i in range(m - 1)]
        rows.append((tuple(coeffs), last[j]))
    for i in range(m - 1):
        rows.append((tuple([0] * n + [1 if t == i else 0 for t in range(m - 1)]), 0))
    if m > 1:
        rows.append((tuple([0] * n + [-1] * (m - 1)), -1))
    for j in range(n):
        rows.append((tuple([1 if t == j else 0 for t in range(n)] + [0] * (m - 1)), 0))
    # the lifted polyhedron is generated by (v_i, e_i), (v_m, 0) and the e_j
    points = [tuple(v) + tuple(1 if t == i else 0 for t in range(m - 1)) for i, v in enumerate(verts)]
    rays = [tuple(1 if t == j else 0 for t in range(n + m - 1)) for j in range(n)]
    projected = fourier_motzkin(rows, list(range(n, n + m - 1)), generators=(points, rays))
    projected = facet_filter(sorted(projected), verts, rays=[r[:n] for r in rays])
    return to_public(projected, n)


def member_of_closure_power(I: MonomialIdeal, a: Sequence[int], d: int) -> bool:
    if I.is_zero:
        return False
    if len(a) != I.dim:
        raise ValueError(f"vector of length {len(a)} in dimension {I.dim}")
    return newton_polyhedron(I).satisfies(a, d)


# --- box enumeration ------------------------------------------------------

def _box_shape(I: MonomialIdeal, d: int) -> tuple[int, ...]:
    return tuple(d * m + 1 for m in I.max_exponents())


def _closure_mask(I: MonomialIdeal, d: int, shape: tuple[int, ...]) -> np.ndarray:
    P = newton_polyhedron(I)
    axes = [np.arange(s, dtype=np.int64).reshape([-1 if i == j else 1 for i in range(len(shape))])
            for j, s in enumerate(shape)]
    mask = np.ones(shape, dtype=bool)
    for normal, off in P.rows:
        lhs = np.zeros(shape, dtype=np.int64)
        for c, ax in zip(normal, axes):
            if c:
                lhs = lhs + c * ax
        mask &= lhs * off.denominator >= d * off.numerator
    return mask


def _power_mask(I: MonomialIdeal, d: int, shape: tuple[int, ...]) -> np.ndarray:
    mask = np.zeros(shape, dtype=bool)
    for g in power(I, d).gens:
        mask[tuple(slice(x, None) for x in g)] = True
    return mask


def _minimal_points(mask: np.ndarray) -> list[Exponent]:
    """Minimal elements of an up-closed boolean grid."""
    minimal = mask.copy()
    for axis in range(mask.ndim):
        below = np.zeros_like(mask)
        dst = [slice(None)] * mask.ndim
        src = [slice(None)] * mask.ndim
        dst[axis] = slice(1, None)
        src[axis] = slice(None, -1)
        below[tuple(dst)] = mask[tuple(src)]
        minimal &= ~below
    return [tuple(int(x) for x in p) for p in np.argwhere(minimal)]


def closure_power_generators(I: MonomialIdeal, d: int) -> MonomialIdeal:
    """G of the integral closure of I^d.

    Every minimal generator has a_j <= d * max_j: past that bound a
    coordinate can be lowered without leaving d * NP(I).
    """
    if d < 1:
        raise ValueError("power must be positive")
    if I.is_zero:
        return I
    shape = _box_shape(I, d)
    return minimalize(_minimal_points(_closure_mask(I, d, shape)), I.dim)


@dataclass
class ClosureGap:
    """Monomials of the closure of I^power missing from I^power (box-bounded)."""

    power: int
    witnesses: list[Exponent] = field(default_factory=list)
    # Heuristic indicator of an infinite gap: some witness stays outside
    # I^power after pushing one coordinate past the largest exponent used
    # by G(I^power) along that axis.
    infinite_family_heuristic: bool = False

    def to_json(self) -> dict:
        return {
            "power": self.power,
            "closed": not self.witnesses,
            "witnesses": [list(w) for w in self.witnesses],
            "infinite_family_heuristic": self.infinite_family_heuristic,
        }


def closure_gap(I: MonomialIdeal, d: int) -> ClosureGap:
    shape = _box_shape(I, d)
    cl = _closure_mask(I, d, shape)
    pw = _power_mask(I, d, shape)
    if (pw & ~cl).any():
        raise RuntimeError("I^d not contained in computed closure; facet description is wrong")
    witnesses = [tuple(int(x) for x in p) for p in np.argwhere(cl & ~pw)]
    Id = power(I, d)
    top = Id.max_exponents()
    infinite = False
    for w in witnesses:
        for j in range(I.dim):
            pushed = w[:j] + (max(w[j], top[j]) + 1,) + w[j + 1:]
            if not Id.contains(pushed):
                infinite = True
                break
        if infinite:
            break
    return ClosureGap(d, witnesses, infinite)


def is_integrally_closed(I: MonomialIdeal, d: int) -> tuple[bool, ClosureGap]:
    if I.is_zero:
        return True, ClosureGap(d)
    closed = equals(closure_power_generators(I, d), power(I, d))
    gap = closure_gap(I, d)
    if closed == bool(gap.witnesses):
        raise RuntimeError("generator comparison and witness scan disagree")
    return closed, gap


@dataclass
class NormalityReport:
    max_power: int
    closed: dict[int, bool]
    gaps: dict[int, ClosureGap]

    @property
    def all_closed(self) -> bool:
        return all(self.closed.values())

    @property
    def first_failure(self) -> int | None:
        return next((d for d in sorted(self.closed) if not self.closed[d]), None)

    def to_json(self) -> dict:
        return {
            "max_power": self.max_power,
            "all_closed": self.all_closed,
            "evidence": f"bounded evidence, K = {self.max_power}",
            "powers": [self.gaps[d].to_json() for d in sorted(self.gaps)],
        }


def is_normal_up_to(I: MonomialIdeal, K: int = 4, stop_at_failure: bool = False) -> NormalityReport:
    """Check I^d against its closure for d = 1..K (a bounded certificate)."""
    if K < 1:
        raise ValueError("K must be positive")
    closed, gaps = {}, {}
    for d in range(1, K + 1):
        closed[d], gaps[d] = is_integrally_closed(I, d)
        if stop_at_failure and not closed[d]:
            break
    return NormalityReport(K, closed, gaps)


@dataclass
class PersistenceReport:
    max_k: int
    holds: dict[int, bool]

    @property
    def all_hold(self) -> bool:
        return all(self.holds.values())

    def to_json(self) -> dict:
        return {
            "max_k": self.max_k,
            "holds": self.all_hold,
            "per_k": {str(k): v for k, v in sorted(self.holds.items())},
        }


def strong_persistence_holds(I: MonomialIdeal, K: int) -> PersistenceReport:
    """(I^{k+1} : I) == I^k for k = 1..K."""
    if K < 1:
        raise ValueError("K must be positive")
    holds = {}
    for k in range(1, K + 1):
        holds[k] = equals(colon_ideal(power(I, k + 1), I), power(I, k))
    return PersistenceReport(K, holds)


def power_witness(I: MonomialIdeal, a: Sequence[int], d: int, max_k: int = 12) -> int | None:
    """Smallest k <= max_k with x^{k a} in I^{k d}, if any."""
    for k in range(1, max_k + 1):
        if contains_monomial_power(I, tuple(k * x for x in a), k * d):
            return k
    return None
