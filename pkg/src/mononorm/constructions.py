"""Factories for the named ideal constructions and their witnesses.

Every factory re-checks the hypotheses of its recipe and refuses to build
when one fails. Ambient dimensions are always explicit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graphs import cover_ideal, cycle, delete_vertex, edge_ideal, kss_graph, kss_label
from .monomials import (
    Exponent,
    MonomialIdeal,
    colon_monomial,
    contains_ideal,
    equals,
    extend,
    ideal_sum,
    indicator,
    intersect,
    intersect_all,
    monomial_str,
    monomial_times,
    product,
    support,
    unit_vector,
)


class ConstructionError(ValueError):
    """A hypothesis of the recipe does not hold for the given input."""


@dataclass
class NamedConstruction:
    id: str
    ideal: MonomialIdeal
    provenance: str
    hypotheses: list[str] = field(default_factory=list)
    extras: dict[str, MonomialIdeal] = field(default_factory=dict)


def _coprime(a: Sequence[int], b: Sequence[int]) -> bool:
    return not (support(a) & support(b))


def _require_squarefree(I: MonomialIdeal, what: str) -> None:
    if not I.is_squarefree:
        bad = next(g for g in I.gens if any(x > 1 for x in g))
        raise ConstructionError(f"{what} must be square-free; generator {monomial_str(bad)} is not")


def build_I_plus_vh(I: MonomialIdeal, v: Sequence[int], h: Sequence[int]) -> NamedConstruction:
    """L = I + vh R for square-free v coprime to G(I) and to h."""
    v, h = tuple(v), tuple(h)
    if len(v) != I.dim or len(h) != I.dim:
        raise ConstructionError("v and h must live in the ring of I")
    if any(x > 1 for x in v):
        raise ConstructionError(f"v = {monomial_str(v)} is not square-free")
    for u in I.gens + (h,):
        if not _coprime(u, v):
            raise ConstructionError(f"gcd({monomial_str(u)}, {monomial_str(v)}) != 1")
    vh = tuple(a + b for a, b in zip(v, h))
    L = ideal_sum(I, MonomialIdeal.principal(vh))
    J = ideal_sum(I, MonomialIdeal.principal(h))
    return NamedConstruction(
        "I+vhR", L,
        f"v = {monomial_str(v)}, h = {monomial_str(h)}; companion J = I + hR",
        ["v square-free", "gcd(u, v) = 1 for u in G(I) and u = h"],
        {"J": J},
    )


def build_JI_plus_h(I: MonomialIdeal, J: MonomialIdeal, h: Sequence[int]) -> NamedConstruction:
    """L = JI + hR with h in I and J square-free with pairwise coprime generators."""
    h = tuple(h)
    if I.dim != J.dim or len(h) != I.dim:
        raise ConstructionError("I, J and h must share the ambient ring")
    if not I.contains(h):
        raise ConstructionError(f"h = {monomial_str(h)} is not in I")
    _require_squarefree(J, "J")
    for a_i, a in enumerate(J.gens):
        for b in J.gens[a_i + 1:]:
            if not _coprime(a, b):
                raise ConstructionError(f"generators {monomial_str(a)} and {monomial_str(b)} of J share a variable")
        for u in I.gens + (h,):
            if not _coprime(a, u):
                raise ConstructionError(f"gcd({monomial_str(u)}, {monomial_str(a)}) != 1")
    L = ideal_sum(product(J, I), MonomialIdeal.principal(h))
    return NamedConstruction(
        "JI+hR", L, f"h = {monomial_str(h)}",
        ["h in I", "J square-free, pairwise coprime generators", "G(J) coprime to G(I) and h"],
    )


def build_corner(I: MonomialIdeal, n_index: int | None = None, extra: int = 1) -> NamedConstruction:
    """IS cap (x_i, x_{n+1} ... x_{n+extra}) in S = R[x_{n+1}, ..., x_{n+extra}].

    Also forms x_i (I : x_i) + (x_{n+1} ... x_{n+extra}) I and checks the two agree.
    """
    _require_squarefree(I, "I")
    n = I.dim
    i = n if n_index is None else n_index
    if not 1 <= i <= n:
        raise ConstructionError(f"variable index {i} out of range 1..{n}")
    if extra < 1:
        raise ConstructionError("need at least one new variable")
    m = n + extra
    IS = extend(I, m)
    xi = unit_vector(m, i)
    w = indicator(m, range(n + 1, m + 1))
    L = intersect(IS, MonomialIdeal.from_generators([xi, w], m))
    colon_form = ideal_sum(monomial_times(xi, colon_monomial(IS, xi)), monomial_times(w, IS))
    if not equals(L, colon_form):
        raise ConstructionError("intersection form and colon form differ")
    return NamedConstruction(
        "corner", L,
        f"x1..x{n} from I, new variables x{n + 1}..x{m}; corner at x{i}",
        ["I square-free", "x_i(I:x_i) + w I equals IS cap (x_i, w)"],
        {"colon_form": colon_form},
    )


def build_question2(I: MonomialIdeal, n_index: int | None = None, ell: int = 2) -> NamedConstruction:
    """IS cap (x_i, x_{n+1}^ell); exposed for experiments, no expected answer."""
    _require_squarefree(I, "I")
    n = I.dim
    i = n if n_index is None else n_index
    if ell < 1:
        raise ConstructionError("ell must be positive")
    m = n + 1
    xi = unit_vector(m, i)
    w = tuple(ell if j == n else 0 for j in range(m))
    L = intersect(extend(I, m), MonomialIdeal.from_generators([xi, w], m))
    return NamedConstruction("question2", L, f"corner at x{i} with x{m}^{ell}", ["I square-free"])


def cycle_edge_ideal(n: int) -> MonomialIdeal:
    return edge_ideal(cycle(n))


def cycle_cover_ideal(n: int) -> MonomialIdeal:
    return cover_ideal(cycle(n))


def build_L_n(n: int) -> NamedConstruction:
    """L_n = x_{n+1} I_n + x_{n+2} J_n in n + 2 variables."""
    if n < 3:
        raise ConstructionError("L_n needs n >= 3")
    m = n + 2
    I = extend(cycle_edge_ideal(n), m)
    J = extend(cycle_cover_ideal(n), m)
    L = ideal_sum(monomial_times(unit_vector(m, n + 1), I), monomial_times(unit_vector(m, n + 2), J))
    if not L.is_squarefree:
        raise ConstructionError("L_n came out non-square-free")
    return NamedConstruction(
        f"L{n}", L,
        f"x1..x{n} cycle vertices, x{n + 1} tags edges, x{n + 2} tags minimal covers",
        ["edge and cover ideal of C_n square-free", "fresh tag variables"],
        {"I": I, "J": J},
    )


def build_T() -> NamedConstruction:
    """T = x6 F + x7 I with I contained in F, all in 7 variables."""
    dim = 7

    def mono(*idx):
        return indicator(dim, idx)

    F = MonomialIdeal.from_generators(
        [mono(1, 2, 4), mono(1, 3, 5), mono(2, 3), mono(2, 5), mono(3, 4)], dim)
    I = MonomialIdeal.from_generators([mono(1, 2, 4), mono(1, 3, 5)], dim)
    v, w = unit_vector(dim, 6), unit_vector(dim, 7)
    for f in F.gens:
        if not _coprime(f, v):
            raise ConstructionError("v shares a variable with F")
    for g in I.gens:
        if not _coprime(g, w):
            raise ConstructionError("w shares a variable with I")
    if not contains_ideal(F, I):
        raise ConstructionError("I is not contained in F")
    T = ideal_sum(monomial_times(v, F), monomial_times(w, I))
    return NamedConstruction(
        "T", T, "x1..x5 base ring, v = x6, w = x7",
        ["gcd(v, F) = 1", "gcd(w, I) = 1", "I contained in F"],
        {"F": F, "I": I},
    )


def build_Q() -> NamedConstruction:
    """Sum of two C_5 cover ideals in disjoint blocks x1..x5 and y1..y5 = x6..x10."""
    J5 = cycle_cover_ideal(5)
    left = extend(J5, 10)
    right = MonomialIdeal(10, tuple((0,) * 5 + g for g in J5.gens))
    Q = ideal_sum(left, right)
    return NamedConstruction(
        "Q", Q, "x1..x5 first cycle, x6..x10 play y1..y5",
        ["blocks use disjoint variables"],
        {"I": left, "J": right},
    )


def kss_neighbour_factor(n: int = 4):
    """Labels in the decomposition of J(kss_graph(4)) at v0_1."""
    v = kss_label(0, 1)
    return v, [kss_label(1, 1), kss_label(0, 0), kss_label(0, 2), kss_label(n - 1, -1)]


def build_H4_minus() -> NamedConstruction:
    """J(G) for G = kss_graph(4) minus v0_1, in the variables of kss_graph(4).

    Checks J(H4) = J(G) cap (x_v, prod of the neighbour variables of v).
    """
    H = kss_graph(4)
    v, nbrs = kss_neighbour_factor(4)
    G = delete_vertex(H, v)
    order = list(H.vertices)
    dim = len(order)
    JH = cover_ideal(H)
    JG = cover_ideal(G, variables=order)
    xv = unit_vector(dim, H.index(v))
    prod_nb = indicator(dim, [H.index(u) for u in nbrs])
    factor = MonomialIdeal.from_generators([xv, prod_nb], dim)
    pairwise = intersect_all([JG] + [MonomialIdeal.from_generators([xv, unit_vector(dim, H.index(u))], dim) for u in nbrs])
    if set(H.neighbors(v)) != set(nbrs):
        raise ConstructionError("neighbour list of v0_1 does not match the graph")
    if not equals(JH, intersect(JG, factor)):
        raise ConstructionError("decomposition of J(H4) fails")
    if not equals(JH, pairwise):
        raise ConstructionError("edge-by-edge decomposition of J(H4) fails")
    return NamedConstruction(
        "H4_minus", JG,
        "variables in kss_graph(4) order: " + ", ".join(H.variable_map()),
        ["J(H4) = J(G) cap (x_v, product over neighbours)"],
        {"J_H4": JH, "factor": factor},
    )


# --- witnesses ----------------------------------------------------------------

def witness_f(n: int) -> Exponent:
    """x1 x2 ... x_{n+2}."""
    if n < 4:
        raise ConstructionError("f is a witness for n >= 4")
    return (1,) * (n + 2)


def witness_h(n: int, i: int) -> Exponent:
    """x1 x2^{i-1} x3 x4^{i-1} ... x_{n-1} x_n^{i-1} x_{n+1} x_{n+2}^{i-1}, n even."""
    if n < 4 or n % 2:
        raise ConstructionError("h_i needs even n >= 4")
    if i < 3:
        raise ConstructionError("h_i needs i >= 3")
    return tuple(1 if j % 2 == 0 else i - 1 for j in range(n)) + (1, i - 1)


def witness_g(n: int, i: int) -> Exponent:
    """x2 ... x_{n-2} x_{n-1}^{i-1} x_n^{i-1} x_{n+1}^{i-1} x_{n+2}, n odd >= 7."""
    if n < 7 or n % 2 == 0:
        raise ConstructionError("g_i needs odd n >= 7")
    if i < 3:
        raise ConstructionError("g_i needs i >= 3")
    return (0,) + (1,) * (n - 3) + (i - 1, i - 1, i - 1, 1)


def witness_alpha_Q() -> Exponent:
    return (1,) * 10


def witness_alpha_T() -> Exponent:
    return (1,) * 7
