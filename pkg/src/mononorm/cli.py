"""Command line front end.

Exit status: 0 when everything is as expected, 1 when a verified claim
does not match its expectation, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import claims as claims_mod
from . import constructions as C
from . import graphs as G
from .closure import (
    closure_power_generators,
    is_normal_up_to,
    member_lp,
    member_of_closure_power,
    newton_polyhedron,
    strong_persistence_holds,
)
from .fixtures import FIXTURES, export_fixture
from .monomials import (
    MonomialIdeal,
    colon_ideal,
    contains_monomial_power,
    format_ideal,
    ideal_sum,
    intersect,
    monomial_str,
    parse_ideal,
    parse_monomial,
    power,
    product,
    substitute_one,
)
from .rees import decompose_in_basis, hilbert_basis, rees_cone


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _ideal(path: str) -> MonomialIdeal:
    try:
        return parse_ideal(_read_text(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _graph(path: str) -> G.SimpleGraph:
    try:
        return G.parse_graph(_read_text(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _vector(text: str, dim: int) -> tuple[int, ...]:
    if text.startswith("x") or text == "1":
        return parse_monomial(text, dim)
    vec = tuple(int(t) for t in text.replace(",", " ").split())
    if len(vec) != dim:
        raise UsageError(f"vector {text!r} needs {dim} entries")
    return vec


class Output:
    def __init__(self, as_json: bool, path: str | None = None):
        self.as_json = as_json
        self.path = path

    def emit(self, text: str, payload) -> None:
        out = json.dumps(payload, sort_keys=True) + "\n" if self.as_json else text
        if not out.endswith("\n"):
            out += "\n"
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)


def _ideal_payload(I: MonomialIdeal) -> dict:
    return {"dim": I.dim, "generators": [list(g) for g in I.gens]}


def _emit_ideal(out: Output, I: MonomialIdeal, symbolic: bool = False) -> None:
    text = format_ideal(I)
    if symbolic:
        text = f"dim {I.dim}\n" + "".join(monomial_str(g) + "\n" for g in I.gens)
    out.emit(text, _ideal_payload(I))


# --- subcommands ---------------------------------------------------------------

def cmd_ideal(a, out: Output) -> int:
    I = _ideal(a.input)
    op = a.op
    if op == "show":
        _emit_ideal(out, I, a.symbolic)
        return 0
    if op in ("sum", "product", "intersect", "colon"):
        if not a.other:
            raise UsageError(f"ideal {op} needs -j")
        J = _ideal(a.other)
        if J.dim != I.dim:
            raise UsageError("ideals live in different dimensions")
        fn = {"sum": ideal_sum, "product": product, "intersect": intersect, "colon": colon_ideal}[op]
        _emit_ideal(out, fn(I, J), a.symbolic)
        return 0
    if op == "power":
        _emit_ideal(out, power(I, a.k), a.symbolic)
        return 0
    if op == "subst":
        if a.var is None:
            raise UsageError("ideal subst needs --var")
        _emit_ideal(out, substitute_one(I, a.var), a.symbolic)
        return 0
    if op == "member":
        if a.point is None:
            raise UsageError("ideal member needs -a")
        v = _vector(a.point, I.dim)
        res = contains_monomial_power(I, v, a.k)
        out.emit(f"{monomial_str(v)} in I^{a.k}: {res}", {"point": list(v), "power": a.k, "member": res})
        return 0
    raise UsageError(f"unknown ideal operation {op}")


def cmd_closure(a, out: Output) -> int:
    I = _ideal(a.input)
    if I.is_zero:
        raise UsageError("closure of the zero ideal is not supported")
    if a.op == "gens":
        _emit_ideal(out, closure_power_generators(I, a.d))
    elif a.op == "check":
        K = a.max_k or a.max_power or 4
        rep = is_normal_up_to(I, K)
        lines = [f"bounded evidence, K = {K}"]
        for d in sorted(rep.closed):
            gap = rep.gaps[d]
            line = f"power {d}: {'closed' if rep.closed[d] else 'NOT closed'}"
            if gap.witnesses:
                line += f"; {len(gap.witnesses)} witnesses, e.g. {monomial_str(gap.witnesses[0])}"
                if gap.infinite_family_heuristic:
                    line += " (heuristic: gap looks infinite)"
            lines.append(line)
        out.emit("\n".join(lines), rep.to_json())
    elif a.op == "persistence":
        K = a.max_k or a.max_power or 3
        rep = strong_persistence_holds(I, K)
        lines = [f"k = {k}: {'holds' if v else 'fails'}" for k, v in sorted(rep.holds.items())]
        out.emit("\n".join(lines), rep.to_json())
    elif a.op == "member":
        if a.point is None:
            raise UsageError("closure member needs -a")
        v = _vector(a.point, I.dim)
        facets, via_lp = member_of_closure_power(I, v, a.d), member_lp(I, v, a.d)
        in_power = contains_monomial_power(I, v, a.d)
        out.emit(
            f"closure (facets): {facets}\nclosure (lp): {via_lp}\nin I^{a.d}: {in_power}",
            {"point": list(v), "power": a.d, "closure_facets": facets, "closure_lp": via_lp,
             "in_power": in_power},
        )
    elif a.op == "facets":
        P = newton_polyhedron(I)
        out.emit("\n".join(P.describe()),
                 {"dim": P.dim, "rows": [{"normal": list(n), "offset": str(c)} for n, c in P.rows]})
    else:
        raise UsageError(f"unknown closure operation {a.op}")
    return 0


def cmd_rees(a, out: Output) -> int:
    I = _ideal(a.input)
    cone = rees_cone(I)
    if a.op == "rays":
        out.emit("\n".join(" ".join(map(str, r)) for r in cone.rays), {"rays": [list(r) for r in cone.rays]})
    elif a.op == "hilbert":
        hb = hilbert_basis(cone)
        out.emit("\n".join(hb.rows()), {"dim": hb.dim, "elements": [list(v) for v in hb.elements]})
    elif a.op == "decompose":
        if a.target is None:
            raise UsageError("rees decompose needs -t")
        target = _vector(a.target, cone.dim)
        hb = hilbert_basis(cone)
        parts = decompose_in_basis(target, hb, cone, degree_one_only=a.degree_one)
        if parts is None:
            out.emit("no decomposition", {"target": list(target), "decomposition": None})
        else:
            out.emit("\n".join(" ".join(map(str, p)) for p in parts),
                     {"target": list(target), "decomposition": [list(p) for p in parts]})
    else:
        raise UsageError(f"unknown rees operation {a.op}")
    return 0


_FAMILIES = {"cycle": G.cycle, "path": G.path, "complete": G.complete,
             "wheel": G.wheel, "helm": G.helm, "kss": G.kss_graph}


def cmd_graph(a, out: Output) -> int:
    if a.op == "make":
        if a.family not in _FAMILIES or a.n is None:
            raise UsageError(f"graph make needs FAMILY N with FAMILY one of {', '.join(_FAMILIES)}")
        try:
            g = _FAMILIES[a.family](a.n)
        except G.GraphError as exc:
            raise UsageError(str(exc)) from None
        out.emit(G.format_graph(g), {"vertices": [str(v) for v in g.vertices],
                                     "edges": [[str(u), str(v)] for u, v in g.sorted_edges()]})
        return 0
    g = _graph(a.graph)
    if a.op == "covers":
        covers = G.minimal_vertex_covers(g)
        pos = {v: i for i, v in enumerate(g.vertices)}
        rows = [sorted(c, key=pos.__getitem__) for c in covers]
        out.emit("\n".join(" ".join(map(str, r)) for r in rows), {"covers": [[str(v) for v in r] for r in rows]})
    elif a.op == "cover-ideal":
        _emit_ideal(out, G.cover_ideal(g))
    elif a.op == "edge-ideal":
        _emit_ideal(out, G.edge_ideal(g))
    elif a.op == "perfect":
        res = G.is_perfect(g)
        out.emit(f"perfect: {res}", {"perfect": res})
    elif a.op == "variables":
        out.emit("\n".join(g.variable_map()), {"variables": [str(v) for v in g.vertices]})
    else:
        raise UsageError(f"unknown graph operation {a.op}")
    return 0


def cmd_make(a, out: Output) -> int:
    what = a.what
    args = a.args
    try:
        if what == "Ln":
            if len(args) != 1:
                raise UsageError("make Ln N")
            _emit_ideal(out, C.build_L_n(int(args[0])).ideal)
        elif what in ("T", "Q", "F"):
            nc = C.build_Q() if what == "Q" else C.build_T()
            _emit_ideal(out, nc.extras["F"] if what == "F" else nc.ideal)
        elif what == "H4-minus":
            _emit_ideal(out, C.build_H4_minus().ideal)
        elif what == "corner":
            if not a.input:
                raise UsageError("make corner needs -i")
            _emit_ideal(out, C.build_corner(_ideal(a.input), a.index, a.extra).ideal)
        elif what == "question2":
            if not a.input:
                raise UsageError("make question2 needs -i")
            _emit_ideal(out, C.build_question2(_ideal(a.input), a.index, a.ell).ideal)
        elif what == "witness":
            if not args:
                raise UsageError("make witness f N | h N I | g N I")
            kind, nums = args[0], [int(x) for x in args[1:]]
            fn = {"f": C.witness_f, "h": C.witness_h, "g": C.witness_g}.get(kind)
            if fn is None:
                raise UsageError(f"unknown witness {kind}")
            w = fn(*nums)
            out.emit(f"{' '.join(map(str, w))}\n{monomial_str(w)}", {"witness": list(w)})
        else:
            raise UsageError(f"unknown construction {what}")
    except (C.ConstructionError, TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_verify(a, out: Output) -> int:
    if a.list:
        rows = list_claims()
        out.emit("\n".join(f"{i:24s} {s:32s} {d}" for i, s, d in rows),
                 {"claims": [{"id": i, "scope": s, "description": d} for i, s, d in rows]})
        return 0
    try:
        selected = claims_mod.select(a.claim)
    except claims_mod.UnknownClaim:
        raise UsageError(f"unknown claim id {a.claim!r}; see `verify --list`") from None
    reports = [claims_mod.run_claim(c, a.timeout) for c in selected]
    lines = []
    for r in reports:
        mark = "ok  " if r.as_expected else "FAIL"
        line = f"{mark} {r.claim_id:24s} {r.verdict:10s} [{r.scope}]"
        if a.timings:
            line += f" {r.elapsed:.2f}s"
        if not r.as_expected:
            line += f"\n     {json.dumps(r.evidence, sort_keys=True)}"
        lines.append(line)
    out.emit("\n".join(lines), {"reports": [r.to_json(a.timings) for r in reports]})
    return 0 if all(r.as_expected for r in reports) else 1


def list_claims() -> list[tuple[str, str, str]]:
    return [(c.id, c.scope, c.description) for c in claims_mod.REGISTRY]


def cmd_fixtures(a, out: Output) -> int:
    if a.op == "list":
        out.emit("\n".join(f"{k:12s} {v[0]}" for k, v in FIXTURES.items()),
                 {"fixtures": {k: v[0] for k, v in FIXTURES.items()}})
        return 0
    if a.op == "export":
        if not a.name:
            raise UsageError("fixtures export NAME")
        try:
            text = export_fixture(a.name)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        out.emit(text, {"name": a.name, "text": text})
        return 0
    raise UsageError(f"unknown fixtures operation {a.op}")


# --- parser --------------------------------------------------------------------

def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    default = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                   help="machine-readable output")
    p.add_argument("--max-power", type=int, default=default, metavar="K")
    p.add_argument("--timeout", type=float, default=default, metavar="SECONDS")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(prog="mononorm", parents=[_global_flags(suppress=False)],
                                     description="Normality of monomial ideals, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", parents=[common], help="ideal arithmetic")
    p.add_argument("op", choices=["show", "sum", "product", "intersect", "colon", "power", "subst", "member"])
    p.add_argument("-i", "--input", default="-")
    p.add_argument("-j", "--other")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--var", type=int)
    p.add_argument("-a", "--point")
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("closure", parents=[common], help="integral closure of powers")
    p.add_argument("op", choices=["gens", "check", "persistence", "member", "facets"])
    p.add_argument("-i", "--input", default="-")
    p.add_argument("-d", type=int, default=1)
    p.add_argument("--max-k", type=int)
    p.add_argument("-a", "--point")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("rees", parents=[common], help="Rees cone and Hilbert basis")
    p.add_argument("op", choices=["hilbert", "rays", "decompose"])
    p.add_argument("-i", "--input", default="-")
    p.add_argument("-t", "--target")
    p.add_argument("--degree-one", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_rees)

    p = sub.add_parser("graph", parents=[common], help="graphs and their ideals")
    p.add_argument("op", choices=["make", "covers", "cover-ideal", "edge-ideal", "perfect", "variables"])
    p.add_argument("family", nargs="?")
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("-g", "--graph", default="-")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("make", parents=[common], help="named constructions")
    p.add_argument("what", choices=["Ln", "T", "Q", "F", "H4-minus", "corner", "question2", "witness"])
    p.add_argument("args", nargs="*")
    p.add_argument("-i", "--input")
    p.add_argument("--index", type=int)
    p.add_argument("--extra", type=int, default=1)
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("verify", parents=[common], help="re-check the registered claims")
    p.add_argument("claim", nargs="?", default="all")
    p.add_argument("--timings", action="store_true")
    p.add_argument("--list", action="store_true", help="list registered claims")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixtures", parents=[common], help="reference data")
    p.add_argument("op", choices=["list", "export"])
    p.add_argument("name", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    out = Output(a.json, getattr(a, "output", None))
    try:
        return a.func(a, out)
    except UsageError as exc:
        print(f"mononorm: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
