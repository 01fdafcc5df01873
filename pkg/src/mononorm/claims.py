"""Registry of desk-checkable statements and the runner that verifies them.

Each claim returns ``(ok, evidence)``; ``ok`` True means the statement was
confirmed on this instance. Claims that bound-check a statement about all
powers say so in their ``scope`` field.
"""

from __future__ import annotations

import random
import re
import signal
import time
from dataclasses import dataclass, field
from typing import Callable

from . import constructions as C
from .closure import (
    closure_power_generators,
    is_integrally_closed,
    is_normal_up_to,
    member_lp,
    member_of_closure_power,
    strong_persistence_holds,
)
from .fixtures import hb_l5_rows
from .graphs import (
    SimpleGraph,
    add_leaf,
    cover_ideal,
    cycle,
    helm,
    is_perfect,
)
from .monomials import (
    MonomialIdeal,
    colon_ideal,
    contains_monomial_power,
    equals,
    extend,
    ideal_sum,
    indicator,
    intersect,
    power,
    product,
    scale,
    substitute_one,
    unit_vector,
)
from .rees import hilbert_basis, rees_cone

Evidence = dict


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    check: Callable[[], tuple[bool, Evidence]]
    scope: str = "exact"
    budget: float = 60.0


@dataclass
class VerificationReport:
    claim_id: str
    verdict: str  # confirmed / refuted / error
    evidence: Evidence = field(default_factory=dict)
    elapsed: float = 0.0
    expected: str = "confirmed"
    scope: str = "exact"

    @property
    def as_expected(self) -> bool:
        return self.verdict == self.expected

    def to_json(self, timings: bool = False) -> dict:
        out = {"id": self.claim_id, "verdict": self.verdict, "expected": self.expected,
               "scope": self.scope, "evidence": self.evidence}
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _vec(a) -> list[int]:
    return [int(x) for x in a]


def _gap_witness(I: MonomialIdeal, a, d: int) -> dict:
    """Both closure routes plus non-membership: the shape of every gap claim."""
    return {
        "witness": _vec(a),
        "power": d,
        "closure_facets": member_of_closure_power(I, a, d),
        "closure_lp": member_lp(I, a, d),
        "in_power": contains_monomial_power(I, a, d),
    }


def _gap_ok(ev: dict) -> bool:
    return ev["closure_facets"] and ev["closure_lp"] and not ev["in_power"]


def _bounded(I: MonomialIdeal, K: int) -> dict:
    rep = is_normal_up_to(I, K)
    return {"K": K, "closed": {str(d): v for d, v in rep.closed.items()},
            "all_closed": rep.all_closed, "scope": f"bounded evidence, K = {K}"}


# --- individual claims ---------------------------------------------------------

def _thm_2_1_example():
    I = extend(C.cycle_cover_ideal(5), 7)
    nc = C.build_I_plus_vh(I, unit_vector(7, 6), unit_vector(7, 7))
    L, J = nc.ideal, nc.extras["J"]
    recovered = equals(substitute_one(L, 6), J)
    bl, bj = _bounded(L, 2), _bounded(J, 2)
    ev = {"generators_L": len(L), "substitution_recovers_J": recovered, "L": bl, "J": bj}
    return recovered and bl["all_closed"] == bj["all_closed"] and bl["all_closed"], ev


def _prop_2_3():
    coprime = MonomialIdeal.from_generators([indicator(5, [1, 2]), indicator(5, [3, 4]), indicator(5, [5])], 5)
    I = extend(C.cycle_cover_ideal(5), 8)
    J = MonomialIdeal.from_generators([indicator(8, [6, 7]), indicator(8, [8])], 8)
    a, b = _bounded(coprime, 3), _bounded(ideal_sum(I, J), 2)
    return a["all_closed"] and b["all_closed"], {"pairwise_coprime": a, "J_C5_plus_coprime": b}


def _rem_2_4():
    nc = C.build_Q()
    Q = nc.ideal
    alpha = C.witness_alpha_Q()
    ev = _gap_witness(Q, alpha, 3)
    x = lambda *i: indicator(10, i)
    listed = [x(1, 2, 4), x(1, 3, 5), x(2, 3, 5), x(6, 7, 9), x(6, 8, 10), x(7, 8, 10)]
    total = [sum(col) for col in zip(*listed)]
    ev["listed_factors_are_generators"] = all(g in Q.gens for g in listed)
    ev["listed_product_divides_alpha_squared"] = all(t <= 2 for t in total)
    ev["alpha_squared_in_Q6"] = contains_monomial_power(Q, scale(alpha, 2), 6)
    ok = _gap_ok(ev) and ev["alpha_squared_in_Q6"] and ev["listed_factors_are_generators"] \
        and ev["listed_product_divides_alpha_squared"]
    return ok, ev


def _lem_2_5():
    I = extend(C.cycle_cover_ideal(5), 8)
    J = MonomialIdeal.from_generators([indicator(8, [6, 7]), indicator(8, [8])], 8)
    same = equals(intersect(I, J), product(I, J))
    b = _bounded(product(I, J), 2)
    return same and b["all_closed"], {"intersection_equals_product": same, "IJ": b}


def _thm_2_7():
    I = C.cycle_cover_ideal(5)
    one = C.build_corner(I, 5, 1)
    two = C.build_corner(I, 5, 2)
    forms = equals(one.ideal, one.extras["colon_form"]) and equals(two.ideal, two.extras["colon_form"])
    b = _bounded(one.ideal, 2)
    return forms and b["all_closed"], {"forms_agree": forms, "corner_extra1": b,
                                       "generators": [len(one.ideal), len(two.ideal)]}


def _rem_2_8():
    nc = C.build_T()
    T, F = nc.ideal, nc.extras["F"]
    alpha = C.witness_alpha_T()
    ev = _gap_witness(T, alpha, 2)
    x = lambda *i: indicator(7, i)
    listed = [x(2, 5, 6), x(3, 4, 6), x(1, 2, 4, 7), x(1, 3, 5, 7)]
    ev["listed_factorization"] = all(g in T.gens for g in listed) and \
        [sum(c) for c in zip(*listed)] == [2] * 7
    ev["T_closed_d1"] = is_integrally_closed(T, 1)[0]
    ev["F"] = _bounded(F, 3)
    ok = _gap_ok(ev) and ev["listed_factorization"] and ev["T_closed_d1"] and ev["F"]["all_closed"]
    return ok, ev


def _q1_kss():
    try:
        nc = C.build_H4_minus()
    except C.ConstructionError as exc:
        return False, {"error": str(exc)}
    return True, {"generators_J_H4": len(nc.extras["J_H4"]), "generators_J_G": len(nc.ideal)}


def _random_graph(rng: random.Random, nverts: int) -> SimpleGraph:
    verts = list(range(1, nverts + 1))
    edges = [(u, v) for u in verts for v in verts if u < v and rng.random() < 0.5]
    if not edges:
        edges = [(1, 2)]
    return SimpleGraph.build(verts, edges)


def _thm_3_4():
    rng = random.Random(20240901)
    rows = []
    ok = True
    for trial in range(10):
        G = _random_graph(rng, rng.randint(3, 6))
        v = rng.choice(G.vertices)
        w = len(G.vertices) + 1
        H = add_leaf(G, v, w)
        JG, JH = cover_ideal(G), cover_ideal(H)
        dim = len(H.vertices)
        ident = equals(JH, intersect(extend(JG, dim), MonomialIdeal.variables(dim, [G.index(v), dim])))
        g_closed = is_normal_up_to(JG, 2).all_closed
        h_closed = is_normal_up_to(JH, 2).all_closed
        rows.append({"edges": [list(e) for e in G.sorted_edges()], "leaf_at": v,
                     "identity": ident, "J_G_closed": g_closed, "J_H_closed": h_closed})
        ok &= ident and (h_closed or not g_closed)
    inst = _bounded(cover_ideal(add_leaf(cycle(5), 5, 6)), 2)
    ok &= inst["all_closed"]
    return ok, {"random_graphs": rows, "C5_plus_leaf": inst}


def _thm_3_8():
    H = helm(5)
    b = _bounded(cover_ideal(H), 2)
    imperfect = not is_perfect(H)
    return b["all_closed"] and imperfect, {"vertices": len(H.vertices), "edges": len(H.edges),
                                          "imperfect": imperfect, "J": b}


def _l3_normal():
    b = _bounded(C.build_L_n(3).ideal, 3)
    return b["all_closed"], b


def _thm_4_1(n):
    def run():
        L = C.build_L_n(n).ideal
        f = C.witness_f(n)
        ev = _gap_witness(L, f, 2)
        ev["f_squared_in_L4"] = contains_monomial_power(L, scale(f, 2), 4)
        return _gap_ok(ev) and ev["f_squared_in_L4"], ev
    return run


def _thm_4_3(n, i):
    def run():
        L = C.build_L_n(n).ideal
        w = C.witness_h(n, i) if n % 2 == 0 else C.witness_g(n, i)
        ev = _gap_witness(L, w, i)
        return _gap_ok(ev), ev
    return run


def _thm_4_5(i):
    def run():
        L = C.build_L_n(5).ideal
        same = equals(closure_power_generators(L, i), power(L, i))
        return same, {"power": i, "closure_equals_power": same, "generators": len(power(L, i))}
    return run


def _thm_4_6(i):
    def run():
        L = C.build_L_n(5).ideal
        w = tuple(x + (i if j == 6 else 0) for j, x in enumerate(C.witness_f(5)))
        ev = _gap_witness(L, w, 2)
        return _gap_ok(ev), ev
    return run


def _colon_to_closure(n, i):
    def run():
        L = C.build_L_n(n).ideal
        Li = power(L, i)
        col = colon_ideal(Li, closure_power_generators(L, i))
        target = MonomialIdeal.variables(n + 2, range(1, 7))
        same = equals(col, target)
        return same, {"n": n, "power": i, "colon": [list(g) for g in col.gens], "matches": same}
    return run


def _hb_l5():
    hb = hilbert_basis(rees_cone(C.build_L_n(5).ideal))
    got = sorted(hb.elements)
    want = sorted(hb_l5_rows())
    missing = [list(v) for v in want if v not in got]
    extra = [list(v) for v in got if v not in want]
    return not missing and not extra, {"rows": len(got), "missing": missing, "unexpected": extra}


def _persistence_jc5():
    rep = strong_persistence_holds(C.cycle_cover_ideal(5), 2)
    return rep.all_hold, rep.to_json()


def _build_registry() -> list[Claim]:
    reg = [
        Claim("thm-2.1-example", "I + vhR vs I + hR for I = J(C5), v = x6, h = x7", _thm_2_1_example,
              "bounded evidence, K = 2"),
        Claim("prop-2.3-coprime", "pairwise coprime square-free ideals and sums with them stay normal",
              _prop_2_3, "bounded evidence, K = 3 / K = 2"),
        Claim("rem-2.4-Q", "alpha in closure(Q^3) but not Q^3", _rem_2_4),
        Claim("lem-2.5-product", "I cap J = IJ for coprime generators, and it is normal", _lem_2_5,
              "bounded evidence, K = 2"),
        Claim("thm-2.7-identity", "IS cap (x_n, x_{n+1}) = x_n(I:x_n) + x_{n+1} I and is normal",
              _thm_2_7, "bounded evidence, K = 2"),
        Claim("rem-2.8-T", "x1...x7 in closure(T^2) but not T^2; F normal", _rem_2_8,
              "exact; F bounded evidence, K = 3"),
        Claim("q1-kss-decomposition", "J(H4) = J(H4 minus v0_1) cap (x_v, neighbour product)", _q1_kss),
        Claim("thm-3.4-leaf", "adding a leaf keeps the cover ideal normal", _thm_3_4,
              "bounded evidence, K = 2", 300.0),
        Claim("thm-3.8-helm5", "cover ideal of helm(5) is normal; helm(5) is imperfect", _thm_3_8,
              "bounded evidence, K = 2", 300.0),
        Claim("L3-normal", "L_3 is normal", _l3_normal, "bounded evidence, K = 3"),
    ]
    for n in (4, 5, 6, 7):
        reg.append(Claim(f"thm-4.1-n{n}", f"f in closure(L_{n}^2) minus L_{n}^2, f^2 in L_{n}^4", _thm_4_1(n)))
    for n, i in ((4, 3), (4, 4), (6, 3), (7, 3)):
        name = "h" if n % 2 == 0 else "g"
        reg.append(Claim(f"thm-4.3-n{n}-i{i}", f"{name}_{i} in closure(L_{n}^{i}) minus L_{n}^{i}", _thm_4_3(n, i)))
    for i in (3, 4):
        reg.append(Claim(f"thm-4.5-i{i}", f"L_5^{i} is integrally closed", _thm_4_5(i), "exact, this power"))
    for i in range(1, 6):
        reg.append(Claim(f"thm-4.6-i{i}", f"x7^{i} f in closure(L_5^2) minus L_5^2", _thm_4_6(i)))
    reg.append(Claim("thm-4.7", "L_5^2 : closure(L_5^2) = (x1..x6)", _colon_to_closure(5, 2)))
    for i in (2, 3):
        reg.append(Claim(f"l4-colon-i{i}", f"L_4^{i} : closure(L_4^{i}) = (x1..x6)", _colon_to_closure(4, i)))
    reg.append(Claim("hb-L5-matrix", "Hilbert basis of the Rees cone of L_5 is the 18-row matrix", _hb_l5))
    reg.append(Claim("persistence-JC5", "(J(C5)^{k+1} : J(C5)) = J(C5)^k for k = 1, 2", _persistence_jc5))
    ids = [c.id for c in reg]
    assert len(ids) == len(set(ids)), "duplicate claim id"
    return reg


REGISTRY: list[Claim] = _build_registry()
BY_ID: dict[str, Claim] = {c.id: c for c in REGISTRY}


class UnknownClaim(KeyError):
    pass


_RANGE = re.compile(r"^(.*?)([a-z])(\d+)\.\.\2?(\d+)$")


def select(selector: str) -> list[Claim]:
    """Resolve "all", an exact id, a group prefix, or a range like thm-4.1-n4..n7."""
    if selector == "all":
        return list(REGISTRY)
    if selector in BY_ID:
        return [BY_ID[selector]]
    m = _RANGE.match(selector)
    if m:
        head, letter, lo, hi = m.group(1), m.group(2), int(m.group(3)), int(m.group(4))
        ids = [f"{head}{letter}{k}" for k in range(lo, hi + 1)]
        if all(i in BY_ID for i in ids):
            return [BY_ID[i] for i in ids]
    group = [c for c in REGISTRY if c.id.startswith(selector + "-")]
    if group:
        return group
    raise UnknownClaim(selector)


class _Timeout(Exception):
    pass


def _alarm(signum, frame):
    raise _Timeout()


def run_claim(claim: Claim, timeout: float | None = None) -> VerificationReport:
    start = time.perf_counter()
    use_alarm = timeout is not None and hasattr(signal, "SIGALRM")
    if use_alarm:
        old = signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, timeout)
    try:
        ok, evidence = claim.check()
        verdict = "confirmed" if ok else "refuted"
    except _Timeout:
        verdict, evidence = "error", {"error": f"timed out after {timeout} s"}
    except Exception as exc:  # a crashing check is reported, not raised
        verdict, evidence = "error", {"error": f"{type(exc).__name__}: {exc}"}
    finally:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old)
    return VerificationReport(claim.id, verdict, evidence, time.perf_counter() - start, scope=claim.scope)


def verify(selector: str = "all", timeout: float | None = None) -> list[VerificationReport]:
    return [run_claim(c, timeout) for c in select(selector)]
