"""Acceptance criteria, one test per criterion with its wall-clock bound.

Run directly (``python tests/test_acceptance.py``) or through pytest; the
terminal summary prints one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import difflib
import itertools
import random
import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest

from mononorm.closure import (
    closure_power_generators,
    is_integrally_closed,
    is_normal_up_to,
    member_lp,
    member_of_closure_power,
    strong_persistence_holds,
)
from mononorm.constructions import (
    build_L_n,
    build_Q,
    build_T,
    witness_alpha_Q,
    witness_alpha_T,
    witness_f,
    witness_g,
    witness_h,
)
from mononorm.fixtures import HB_L5_TEXT, hb_l5_rows
from mononorm.graphs import (
    add_leaf,
    cover_ideal,
    cycle,
    delete_vertex,
    helm,
    kss_graph,
    minimal_vertex_covers,
    path,
    SimpleGraph,
    wheel,
)
from mononorm.monomials import (
    MonomialIdeal,
    colon_ideal,
    contains_monomial_power,
    divides,
    equals,
    indicator,
    intersect,
    power,
)
from mononorm.rees import hilbert_basis, rees_cone

from conftest import IDEAL_FIXTURES, load


@contextmanager
def within(seconds: float):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f} s, bound {seconds} s"


def in_gap(I, a, d):
    """Closure by both routes, and not in the ordinary power."""
    return member_of_closure_power(I, a, d) and member_lp(I, a, d) and not contains_monomial_power(I, a, d)


def test_criterion_1_cover_ideal_of_C5():
    with within(1):
        J = cover_ideal(cycle(5))
        expected = {indicator(5, s) for s in [(1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5)]}
        assert set(J.gens) == expected and len(J) == 5


def test_criterion_2_f_outside_L_n_square():
    with within(30):
        for n in (4, 5, 6, 7):
            L = build_L_n(n).ideal
            f = witness_f(n)
            assert member_of_closure_power(L, f, 2) is True, n
            assert contains_monomial_power(L, f, 2) is False, n
            assert contains_monomial_power(L, tuple(2 * x for x in f), 4) is True, n


def test_criterion_3_h_and_g_witnesses():
    with within(120):
        for n, i in [(4, 3), (4, 4), (6, 3)]:
            L = build_L_n(n).ideal
            assert in_gap(L, witness_h(n, i), i), (n, i)
        L7 = build_L_n(7).ideal
        assert in_gap(L7, witness_g(7, 3), 3)


def test_criterion_4_L5_powers_three_and_four_closed():
    with within(180):
        L5 = build_L_n(5).ideal
        for d in (3, 4):
            assert equals(closure_power_generators(L5, d), power(L5, d)), d
        closed, gap = is_integrally_closed(L5, 2)
        assert closed is False
        assert witness_f(5) in gap.witnesses


def test_criterion_5_hilbert_basis_of_L5():
    with within(120):
        hb = hilbert_basis(rees_cone(build_L_n(5).ideal))
        assert set(hb.elements) == set(hb_l5_rows())
        text = "\n".join(hb.rows()) + "\n"
        diff = list(difflib.unified_diff(HB_L5_TEXT.splitlines(), text.splitlines(), lineterm=""))
        assert not diff, "\n".join(diff)
        assert (1, 1, 1, 1, 1, 1, 1, 2) in hb.elements


def test_criterion_6_colon_by_closure():
    with within(120):
        m = MonomialIdeal.variables(7, range(1, 7))
        L5 = build_L_n(5).ideal
        assert equals(colon_ideal(power(L5, 2), closure_power_generators(L5, 2)), m)
        L4 = build_L_n(4).ideal
        for i in (2, 3):
            got = colon_ideal(power(L4, i), closure_power_generators(L4, i))
            assert equals(got, MonomialIdeal.variables(6, range(1, 7))), i


def test_criterion_7_x7_power_family():
    with within(30):
        L5 = build_L_n(5).ideal
        f = witness_f(5)
        for i in range(1, 6):
            a = f[:6] + (f[6] + i,)
            assert in_gap(L5, a, 2), i


def test_criterion_8_counterexamples_T_and_Q():
    with within(60):
        T = build_T().ideal
        assert in_gap(T, witness_alpha_T(), 2)
        Q = build_Q().ideal
        alpha = witness_alpha_Q()
        assert not contains_monomial_power(Q, alpha, 3)
        assert contains_monomial_power(Q, tuple(2 * x for x in alpha), 6)
        assert member_of_closure_power(Q, alpha, 3) and member_lp(Q, alpha, 3)


def test_criterion_9_kss_decomposition():
    with within(60):
        H = kss_graph(4)
        G = delete_vertex(H, "v0_1")
        x = {v: H.index(v) for v in H.vertices}
        JG = cover_ideal(G, variables=H.vertices)
        factor = MonomialIdeal.from_generators(
            [indicator(12, [x["v0_1"]]), indicator(12, [x["v1_1"], x["v0_0"], x["v0_2"], x["v3_2"]])], 12)
        assert equals(cover_ideal(H), intersect(JG, factor))


def test_criterion_10_bounded_normality():
    with within(480):
        cases = [
            (build_L_n(3).ideal, 3),
            (cover_ideal(cycle(5)), 3),
            (cover_ideal(add_leaf(cycle(5), 5, 6)), 2),
            (cover_ideal(helm(5)), 2),
        ]
        for I, K in cases:
            rep = is_normal_up_to(I, K)
            assert rep.all_closed, (I, K)
            assert rep.to_json()["evidence"] == f"bounded evidence, K = {K}"


def _brute_power(I, a, k):
    return any(divides(tuple(map(sum, zip(*c))), a) for c in itertools.combinations_with_replacement(I.gens, k))


def _brute_covers(G):
    V, out = list(G.vertices), []
    for r in range(len(V) + 1):
        for S in map(frozenset, itertools.combinations(V, r)):
            if all(e & S for e in G.edges) and not any(c <= S for c in out):
                out.append(S)
    return set(out)


def test_criterion_11_property_suites():
    with within(180):
        rng = random.Random(20240901)
        ideals = {name: load(name) for name in IDEAL_FIXTURES}
        # two closure routes on 500 points per fixture
        for name, I in ideals.items():
            M = I.max_exponents()
            for _ in range(500):
                d = rng.randint(1, 3)
                a = tuple(rng.randint(0, d * m + 1) for m in M)
                assert member_of_closure_power(I, a, d) == member_lp(I, a, d), (name, a, d)
        # power membership against the multiset definition
        for name, I in ideals.items():
            if len(I) > 12:
                continue
            for k in (1, 2, 3):
                for _ in range(60):
                    combo = [rng.choice(I.gens) for _ in range(k)]
                    a = [sum(c) for c in zip(*combo)]
                    j = rng.randrange(I.dim)
                    a[j] = max(0, a[j] - rng.randint(0, 1))
                    a = tuple(a)
                    assert contains_monomial_power(I, a, k) == _brute_power(I, a, k), (name, a, k)
        # vertex covers against subset enumeration
        graphs = [cycle(5), cycle(8), path(7), wheel(7), helm(5), kss_graph(4),
                  delete_vertex(kss_graph(4), "v0_1"), add_leaf(cycle(5), 5, 6)]
        for _ in range(20):
            n = rng.randint(3, 12)
            edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.35]
            graphs.append(SimpleGraph.build(range(1, n + 1), edges))
        for G in graphs:
            assert len(G.vertices) <= 12
            assert set(minimal_vertex_covers(G)) == _brute_covers(G)
        # Hilbert basis: irreducible, and complete on the box [0,3]^8
        cone = rees_cone(ideals["L5"])
        hb = hilbert_basis(cone)
        elems = set(hb.elements)
        for h in elems:
            assert cone.facets.satisfies(h)
            assert not any(tuple(p - q for p, q in zip(h, a)) in elems for a in elems if a != h)
        pts = np.array(list(itertools.product(range(4), repeat=8)), dtype=np.int64)
        pts = pts[cone.facets.mask(pts)]
        pts = pts[np.argsort(pts.sum(axis=1), kind="stable")]
        generated = {(0,) * 8}
        for p in map(tuple, pts):
            if p not in generated:
                assert any(tuple(a - b for a, b in zip(p, h)) in generated for h in elems), p
                generated.add(p)


def test_criterion_12_strong_persistence_of_JC5():
    with within(30):
        J = cover_ideal(cycle(5))
        rep = strong_persistence_holds(J, 2)
        assert rep.holds == {1: True, 2: True}
        for k in (1, 2):
            assert equals(colon_ideal(power(J, k + 1), J), power(J, k))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
