"""Rees cones and Hilbert bases of pointed rational cones.

The Hilbert basis follows the primal route: placing triangulation, lattice
points of each half-open fundamental parallelepiped, then a global pass
discarding reducible candidates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Optional, Sequence

from . import linalg, lp
from .closure import newton_polyhedron
from .monomials import MonomialIdeal
from .polyhedra import HalfspaceSystem, facet_filter, to_public

Vector = tuple[int, ...]


class ConeError(ValueError):
    pass


def primitive(v: Sequence) -> Vector:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ConeError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class SimplicialCone:
    rays: tuple[int, ...]  # indices into the parent cone's ray list
    det: int  # |det| of the rays in span coordinates


@dataclass(frozen=True)
class RationalCone:
    dim: int
    rays: tuple[Vector, ...]
    facets: Optional[HalfspaceSystem] = field(default=None, compare=False)

    def __post_init__(self):
        if not self.rays:
            raise ConeError("cone needs at least one ray")
        for r in self.rays:
            if len(r) != self.dim:
                raise ConeError(f"ray {r} does not have length {self.dim}")
            if not any(r):
                raise ConeError("zero ray")
            if primitive(r) != tuple(r):
                raise ConeError(f"ray {r} is not primitive")

    @cached_property
    def rank(self) -> int:
        return linalg.rank(self.rays)

    @cached_property
    def _span_coords(self) -> list[int]:
        """Coordinates on which projecting the span is injective."""
        return linalg.independent_rows(linalg.transpose(self.rays))

    def project(self, v: Sequence) -> list:
        return [v[j] for j in self._span_coords]


def rees_cone(I: MonomialIdeal) -> RationalCone:
    """Cone spanned by (v, 1) for v in G(I) and e_1..e_n; degree coordinate last."""
    if I.is_zero:
        raise ValueError("the zero ideal has no Rees cone")
    n = I.dim
    rays = [tuple(v) + (1,) for v in I.gens]
    rays += [tuple(1 if t == j else 0 for t in range(n + 1)) for j in range(n)]
    P = newton_polyhedron(I)
    rows = []
    for normal, off in P.rows:
        rows.append((tuple(off.denominator * c for c in normal) + (-off.numerator,), 0))
    rows.append((tuple([0] * n + [1]), 0))
    # homogeneous rows: the apex is the one vertex, tight everywhere
    apex = (0,) * (n + 1)
    facets = to_public(facet_filter(sorted(set(rows)), [apex], rays), n + 1)
    return RationalCone(n + 1, tuple(rays), facets)


# --- pointedness and grading -------------------------------------------------

def positive_grading(c: RationalCone) -> list[Fraction]:
    """A linear form taking value >= 1 on every ray; raises if not pointed."""
    d = c.dim
    A = []
    m = len(c.rays)
    for i, r in enumerate(c.rays):
        A.append(list(r) + [-x for x in r] + [-1 if t == i else 0 for t in range(m)])
    res = lp.solve([0] * (2 * d + len(c.rays)), A, [1] * len(c.rays))
    if res.status != "optimal":
        raise ConeError("cone is not pointed")
    return [res.x[j] - res.x[d + j] for j in range(d)]


def is_pointed(c: RationalCone) -> bool:
    try:
        positive_grading(c)
    except ConeError:
        return False
    return True


# --- triangulation -----------------------------------------------------------

def triangulate(c: RationalCone, order: Sequence[int] | None = None) -> list[SimplicialCone]:
    """Placing triangulation inside the linear span of the rays.

    Rays are inserted in ``order`` (default: as given). Each new ray is
    joined to every boundary facet it sees from outside.
    """
    positive_grading(c)
    order = list(range(len(c.rays))) if order is None else list(order)
    pts = [c.project(r) for r in c.rays]
    k = c.rank
    first = []
    basis: list = []
    for i in order:
        if linalg.rank(basis + [pts[i]]) > len(basis):
            basis.append(pts[i])
            first.append(i)
        if len(first) == k:
            break
    simplices: list[tuple[int, ...]] = [tuple(sorted(first))]
    normals: dict[tuple[tuple[int, ...], int], list[Fraction]] = {}

    def facet_normal(facet: tuple[int, ...], opposite: int) -> list[Fraction]:
        key = (facet, opposite)
        if key not in normals:
            if k == 1:
                nv = [Fraction(1)]
            else:
                nv = linalg.nullspace_vector([pts[i] for i in facet], k)
            if sum(a * b for a, b in zip(nv, pts[opposite])) < 0:
                nv = [-x for x in nv]
            normals[key] = nv
        return normals[key]

    for r in order:
        if r in first:
            continue
        count: dict[tuple[int, ...], list] = {}
        for s in simplices:
            for t in s:
                facet = tuple(x for x in s if x != t)
                count.setdefault(facet, []).append(t)
        new = []
        for facet, opp in count.items():
            if len(opp) != 1:
                continue
            nv = facet_normal(facet, opp[0])
            if sum(a * b for a, b in zip(nv, pts[r])) < 0:
                new.append(tuple(sorted(facet + (r,))))
        simplices.extend(new)
    out = []
    for s in simplices:
        d = abs(linalg.det([pts[i] for i in s]))
        out.append(SimplicialCone(s, int(d)))
    return out


def normalized_volume(subcones: Sequence[SimplicialCone]) -> int:
    return sum(s.det for s in subcones)


def section_volume(c: RationalCone, subcones: Sequence[SimplicialCone]) -> Fraction:
    """Normalized volume of the cross-section {grading = 1}.

    Unlike the raw determinant sum this does not depend on the
    triangulation, since every ray is rescaled onto the same hyperplane.
    """
    g = positive_grading(c)
    total = Fraction(0)
    for s in subcones:
        scale = Fraction(1)
        for i in s.rays:
            scale *= sum(a * b for a, b in zip(g, c.rays[i]))
        total += Fraction(s.det) / scale
    return total


# --- lattice points -----------------------------------------------------------

def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def parallelepiped_points(c: RationalCone, s: SimplicialCone) -> list[Vector]:
    """Nonzero lattice points sum q_i r_i with every q_i in [0, 1)."""
    R = [c.project(c.rays[i]) for i in s.rays]  # rows are rays
    Rinv = linalg.inverse(linalg.transpose(R))  # span coords -> ray coords
    k = len(R)
    gens = []
    for j in range(k):
        q = tuple(_frac(Rinv[i][j]) for i in range(k))
        if any(q):
            gens.append(q)
    zero = tuple(Fraction(0) for _ in range(k))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for q in frontier:
            for g in gens:
                p = tuple(_frac(a + b) for a, b in zip(q, g))
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
        if len(seen) > s.det:
            raise RuntimeError("residue group larger than the determinant")
    out = []
    full = [c.rays[i] for i in s.rays]
    for q in seen:
        if not any(q):
            continue
        x = [sum(qi * r[t] for qi, r in zip(q, full)) for t in range(c.dim)]
        if all(v.denominator == 1 for v in x):
            out.append(tuple(int(v) for v in x))
    return out


class _Membership:
    """Cone membership by facets when known, else by the triangulation."""

    def __init__(self, c: RationalCone, subcones: Sequence[SimplicialCone]):
        self.c = c
        self.inverses = []
        if c.facets is None:
            for s in subcones:
                R = [c.project(c.rays[i]) for i in s.rays]
                self.inverses.append((s, linalg.inverse(linalg.transpose(R))))

    def __call__(self, x: Sequence[int]) -> bool:
        c = self.c
        if c.facets is not None:
            return c.facets.satisfies(x)
        px = c.project(x)
        for s, Rinv in self.inverses:
            q = linalg.matvec(Rinv, px)
            if all(v >= 0 for v in q):
                lift = [sum(qi * c.rays[i][t] for qi, i in zip(q, s.rays)) for t in range(c.dim)]
                if all(a == b for a, b in zip(lift, x)):
                    return True
        return False


@dataclass(frozen=True)
class HilbertBasis:
    dim: int
    elements: tuple[Vector, ...]

    def rows(self) -> list[str]:
        return [" ".join(str(x) for x in v) for v in self.elements]


def hilbert_basis(c: RationalCone, subcones: Sequence[SimplicialCone] | None = None) -> HilbertBasis:
    grading = positive_grading(c)
    if subcones is None:
        subcones = triangulate(c)
    member = _Membership(c, subcones)
    cands = set(c.rays)
    for s in subcones:
        cands.update(parallelepiped_points(c, s))

    def grade(v):
        return sum(g * x for g, x in zip(grading, v))

    kept: list[Vector] = []
    for x in sorted(cands, key=lambda v: (grade(v), v)):
        if not any(member(tuple(a - b for a, b in zip(x, y))) for y in kept):
            kept.append(x)
    return HilbertBasis(c.dim, tuple(sorted(kept)))


def cone_membership(c: RationalCone):
    """Callable testing membership of integer vectors in c."""
    return _Membership(c, triangulate(c) if c.facets is None else [])


def decompose_in_basis(
    target: Sequence[int],
    hb: HilbertBasis,
    cone: RationalCone,
    degree_one_only: bool = False,
) -> list[Vector] | None:
    """Write target as a non-negative integer sum of basis elements.

    With ``degree_one_only`` only elements whose last coordinate is 0 or 1
    may be used, so the number of summands ending in 1 equals the target's
    last coordinate. ``None`` means no such decomposition exists.
    """
    target = tuple(target)
    member = cone_membership(cone)
    if not member(target):
        raise ConeError(f"{target} is not in the cone")
    grading = positive_grading(cone)
    elems = [h for h in hb.elements if not degree_one_only or h[-1] in (0, 1)]
    elems.sort(key=lambda h: (-sum(g * x for g, x in zip(grading, h)), h))
    failed: set = set()

    def search(res: Vector, start: int) -> list[Vector] | None:
        if not any(res):
            return []
        key = (res, start)
        if key in failed:
            return None
        for i in range(start, len(elems)):
            h = elems[i]
            rest = tuple(a - b for a, b in zip(res, h))
            if member(rest):
                sub = search(rest, i)
                if sub is not None:
                    return [h] + sub
        failed.add(key)
        return None

    out = search(target, 0)
    if out is not None and degree_one_only:
        assert sum(1 for h in out if h[-1] == 1) == target[-1]
    return out
