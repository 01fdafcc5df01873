from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from mononorm.closure import closure_power_generators, member_of_closure_power
from mononorm.constructions import build_L_n
from mononorm.fixtures import hb_l5_rows
from mononorm.monomials import MonomialIdeal, minimalize
from mononorm.rees import (
    ConeError,
    HilbertBasis,
    RationalCone,
    cone_membership,
    decompose_in_basis,
    hilbert_basis,
    is_pointed,
    positive_grading,
    primitive,
    rees_cone,
    section_volume,
    triangulate,
)

from conftest import load


@pytest.fixture(scope="module")
def L5_cone():
    return rees_cone(build_L_n(5).ideal)


@pytest.fixture(scope="module")
def L5_basis(L5_cone):
    return hilbert_basis(L5_cone)


def lattice_points(dim, bound):
    return itertools.product(range(bound + 1), repeat=dim)


def brute_hilbert_basis(member, dim, bound):
    """Irreducible nonzero cone points with all coordinates <= bound."""
    pts = [p for p in lattice_points(dim, bound) if any(p) and member(p)]
    pset = set(pts)
    out = []
    for p in pts:
        reducible = any(
            q != p and tuple(a - b for a, b in zip(p, q)) in pset
            for q in pts if all(b <= a for a, b in zip(p, q))
        )
        if not reducible:
            out.append(p)
    return sorted(out)


# --- cones -----------------------------------------------------------------------

def test_rees_cone_of_a_variable():
    c = rees_cone(MonomialIdeal.from_generators([(1,)], 1))
    assert set(c.rays) == {(1, 1), (1, 0)}
    with pytest.raises(ValueError):
        rees_cone(MonomialIdeal.zero(2))


def test_rees_cone_of_L5(L5_cone):
    L5 = build_L_n(5).ideal
    assert L5_cone.dim == 8
    lifted = [r for r in L5_cone.rays if r[-1] == 1]
    assert sorted(lifted) == sorted(tuple(g) + (1,) for g in L5.gens)
    assert len(lifted) == 10
    assert (0, 1, 0, 1, 1, 0, 1, 1) in lifted
    assert tuple([0] * 7 + [1]) not in L5_cone.rays
    for r in L5_cone.rays:
        assert L5_cone.facets.satisfies(r)


def test_primitive_and_ray_validation():
    assert primitive((2, 4, 0)) == (1, 2, 0)
    with pytest.raises(ConeError):
        RationalCone(2, ((2, 0),))
    with pytest.raises(ConeError):
        RationalCone(2, ((0, 0),))


def test_pointedness():
    assert is_pointed(RationalCone(2, ((1, 0), (0, 1))))
    line = RationalCone(2, ((1, 0), (-1, 0)))
    assert not is_pointed(line)
    with pytest.raises(ConeError):
        hilbert_basis(line)
    g = positive_grading(RationalCone(2, ((1, 0), (1, 2))))
    assert all(sum(a * b for a, b in zip(g, r)) >= 1 for r in ((1, 0), (1, 2)))


# --- triangulation ----------------------------------------------------------------

def test_triangulation_small_cases():
    simplicial = RationalCone(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert [s.rays for s in triangulate(simplicial)] == [(0, 1, 2)]
    fan = RationalCone(2, ((1, 0), (1, 1), (0, 1)))
    assert len(triangulate(fan)) == 2


def test_triangulation_inside_span():
    # rank 2 cone in R^3
    c = RationalCone(3, ((1, 0, 1), (0, 1, 1), (1, 1, 2)))
    subs = triangulate(c)
    assert all(len(s.rays) == 2 for s in subs)
    assert sorted(hilbert_basis(c).elements) == [(0, 1, 1), (1, 0, 1)]


def test_section_volume_independent_of_order(L5_cone):
    rng = random.Random(11)
    base = section_volume(L5_cone, triangulate(L5_cone))
    for _ in range(3):
        order = list(range(len(L5_cone.rays)))
        rng.shuffle(order)
        assert section_volume(L5_cone, triangulate(L5_cone, order)) == base


def test_triangulation_covers_cone(L5_cone):
    # every sampled cone point lies in some subcone
    tri_member = cone_membership(RationalCone(L5_cone.dim, L5_cone.rays))
    rng = random.Random(5)
    hits = 0
    for _ in range(300):
        x = tuple(rng.randint(0, 3) for _ in range(7)) + (rng.randint(0, 3),)
        inside = L5_cone.facets.satisfies(x)
        assert tri_member(x) == inside, x
        hits += inside
    assert hits > 50


# --- Hilbert bases ------------------------------------------------------------------

def test_unit_cone_basis():
    c = RationalCone(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert hilbert_basis(c).elements == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_two_dimensional_basis_against_brute_force():
    c = RationalCone(2, ((1, 0), (1, 2)))
    hb = hilbert_basis(c)
    assert hb.elements == ((1, 0), (1, 1), (1, 2))
    member = cone_membership(c)
    assert brute_hilbert_basis(member, 2, 3) == list(hb.elements)


def test_L5_basis_matches_reference(L5_basis):
    assert sorted(L5_basis.elements) == hb_l5_rows()
    assert (1, 1, 1, 1, 1, 1, 1, 2) in L5_basis.elements


def test_L5_basis_without_facets_agrees(L5_cone, L5_basis):
    bare = RationalCone(L5_cone.dim, L5_cone.rays)
    assert hilbert_basis(bare).elements == L5_basis.elements


def test_basis_elements_irreducible(L5_cone, L5_basis):
    elems = set(L5_basis.elements)
    for h in elems:
        assert L5_cone.facets.satisfies(h)
        for a in elems:
            b = tuple(x - y for x, y in zip(h, a))
            assert b not in elems or not any(b)


def test_basis_complete_at_test_scale(L5_cone, L5_basis):
    # sweep the box bottom-up: p is generated iff p - h is, for some basis h
    pts = np.array(list(itertools.product(range(4), repeat=8)), dtype=np.int64)
    inside = L5_cone.facets.mask(pts)
    pts = pts[inside]
    order = np.argsort(pts.sum(axis=1), kind="stable")
    generated = {(0,) * 8}
    basis = L5_basis.elements
    for p in map(tuple, pts[order]):
        if p in generated:
            continue
        if any(tuple(a - b for a, b in zip(p, h)) in generated for h in basis):
            generated.add(p)
        else:
            pytest.fail(f"{p} is not a sum of basis elements")
    assert len(generated) == len(pts)
    # spot-check the search-based decomposer on the same box
    rng = random.Random(2)
    for p in rng.sample([tuple(p) for p in pts if any(p)], 200):
        parts = decompose_in_basis(p, L5_basis, L5_cone)
        assert parts is not None
        assert tuple(map(sum, zip(*parts))) == p


@pytest.mark.parametrize("name", ["L3", "L4", "J-C5", "T"])
def test_basis_invariants_other_fixtures(name):
    c = rees_cone(load(name))
    hb = hilbert_basis(c)
    elems = set(hb.elements)
    for h in elems:
        assert c.facets.satisfies(h)
        for a in elems:
            b = tuple(x - y for x, y in zip(h, a))
            assert b not in elems or not any(b)
    # degree-1 part of the basis generates the closure of I
    deg1 = {h[:-1] for h in elems if h[-1] == 1}
    I = load(name)
    assert minimalize(deg1, I.dim) == closure_power_generators(I, 1)


@pytest.mark.parametrize("name", ["L4", "L5", "J-C5", "T"])
def test_cone_slices_match_closure(name):
    I = load(name)
    c = rees_cone(I)
    rng = random.Random(name)
    M = I.max_exponents()
    for _ in range(300):
        d = rng.randint(1, 3)
        v = tuple(rng.randint(0, d * m) for m in M)
        assert c.facets.satisfies(v + (d,)) == member_of_closure_power(I, v, d)


# --- decompositions ------------------------------------------------------------------

def test_displayed_decompositions(L5_cone, L5_basis):
    first = decompose_in_basis((1, 1, 1, 2, 2, 2, 1, 3), L5_basis, L5_cone, degree_one_only=True)
    assert sorted(first) == sorted([(0, 1, 0, 1, 1, 0, 1, 1), (1, 0, 0, 0, 1, 1, 0, 1), (0, 0, 1, 1, 0, 1, 0, 1)])
    second = decompose_in_basis((1, 2, 1, 2, 2, 1, 2, 3), L5_basis, L5_cone, degree_one_only=True)
    assert sorted(second) == sorted([(1, 1, 0, 1, 0, 0, 1, 1), (0, 1, 1, 0, 1, 0, 1, 1), (0, 0, 0, 1, 1, 1, 0, 1)])


def test_decomposition_edge_cases(L5_cone, L5_basis):
    for h in L5_basis.elements:
        assert decompose_in_basis(h, L5_basis, L5_cone) == [h]
    # f in degree 2 needs the degree-2 basis element
    f2 = (1,) * 7 + (2,)
    assert decompose_in_basis(f2, L5_basis, L5_cone, degree_one_only=True) is None
    assert decompose_in_basis(f2, L5_basis, L5_cone) == [f2]
    with pytest.raises(ConeError):
        decompose_in_basis((0,) * 7 + (1,), L5_basis, L5_cone)


def test_hilbert_basis_rows_format():
    hb = HilbertBasis(2, ((1, 0), (1, 1)))
    assert hb.rows() == ["1 0", "1 1"]
