from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mononorm import lp
from mononorm.closure import member_lp, newton_polyhedron
from mononorm.monomials import minimalize
from mononorm.polyhedra import facet_filter, fourier_motzkin, is_redundant, remove_redundant


def test_known_optimum():
    # min -x - y  s.t.  x + y + s = 4, x + 3y + t = 6
    res = lp.solve([-1, -1, 0, 0], [[1, 1, 1, 0], [1, 3, 0, 1]], [4, 6])
    assert res.status == "optimal"
    assert res.value == -4
    A = [[1, 1, 1, 0], [1, 3, 0, 1]]
    assert all(sum(a * x for a, x in zip(row, res.x)) == b for row, b in zip(A, [4, 6]))


def test_fractional_optimum_is_exact():
    # min x  s.t. 3x - s = 1
    res = lp.solve([1, 0], [[3, -1]], [1])
    assert res.status == "optimal"
    assert res.x[0] == Fraction(1, 3)


def test_infeasible_and_unbounded():
    assert lp.solve([0], [[1], [1]], [1, 2]).status == "infeasible"
    assert lp.solve([-1, 0], [[1, -1]], [0]).status == "unbounded"
    assert lp.feasible([[1, 1]], [-1]) is None
    assert lp.feasible([[1, 1]], [2]) is not None


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(2, 5), st.data())
def test_agrees_with_float_solver(m, n, data):
    linprog = pytest.importorskip("scipy.optimize").linprog
    ints = st.integers(-3, 3)
    A = [[data.draw(ints) for _ in range(n)] for _ in range(m)]
    b = [data.draw(st.integers(0, 5)) for _ in range(m)]
    c = [data.draw(st.integers(0, 4)) for _ in range(n)]
    ours = lp.solve(c, A, b)
    ref = linprog(c, A_eq=A, b_eq=b, bounds=[(0, None)] * n, method="highs")
    # c >= 0 keeps the problem bounded below
    assert ours.status != "unbounded"
    assert (ours.status == "optimal") == (ref.status == 0)
    if ref.status == 0:
        assert abs(float(ours.value) - ref.fun) < 1e-7


def test_fourier_motzkin_projects_triangle():
    # x = l1*(1,0) + l2*(0,1) + r, with l1 + l2 = 1 eliminated to l1 only:
    # rows over (x1, x2, l1): x1 - l1 >= 0, x2 - (1 - l1) >= 0, l1 >= 0, 1 - l1 >= 0
    rows = [((1, 0, -1), 0), ((0, 1, 1), 1), ((0, 0, 1), 0), ((0, 0, -1), -1)]
    out = sorted(remove_redundant([(r[:2], c) for r, c in fourier_motzkin(rows, [2])]))
    assert ((1, 1), 1) in out
    assert ((1, 0), 0) in out and ((0, 1), 0) in out
    assert len(out) == 3


def test_redundancy():
    base = [((1, 0), 0), ((0, 1), 0)]
    assert is_redundant(((1, 1), 0), base)
    assert not is_redundant(((1, 1), 1), base)


small_ideals = st.lists(st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple), min_size=1, max_size=6)


@settings(max_examples=60, deadline=None)
@given(small_ideals, st.data())
def test_facet_filter_against_lp_oracle(gens, data):
    I = minimalize(gens, 3)
    P = newton_polyhedron(I)
    ints = [(tuple(x * c.denominator for x in n), c.numerator) for n, c in P.rows]
    # nothing kept is implied by the rest
    assert len(remove_redundant(ints)) == len(ints)
    # and nothing needed was dropped
    for _ in range(15):
        a = tuple(data.draw(st.integers(0, 7)) for _ in range(3))
        d = data.draw(st.integers(1, 2))
        assert P.satisfies(a, d) == member_lp(I, a, d)


def test_facet_filter_on_a_square():
    pts = [(0, 0), (1, 0), (0, 1), (1, 1)]
    rows = [((1, 0), 0), ((0, 1), 0), ((-1, 0), -1), ((0, -1), -1), ((1, 1), 0), ((-1, -1), -3)]
    assert sorted(facet_filter(rows, pts, [])) == sorted(rows[:4])
