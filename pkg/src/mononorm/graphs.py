"""Simple graphs, minimal vertex covers, edge and cover ideals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .monomials import MonomialIdeal, minimalize

Label = Hashable


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple
    edges: frozenset  # of frozenset({u, v})

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex labels")
        vs = set(self.vertices)
        for e in self.edges:
            if len(e) != 2:
                raise GraphError(f"loop or malformed edge {set(e)}")
            if not e <= vs:
                raise GraphError(f"edge {sorted(map(str, e))} uses an undeclared vertex")

    @classmethod
    def build(cls, vertices: Iterable[Label], edges: Iterable[Sequence[Label]]) -> "SimpleGraph":
        es = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at {u}")
            es.add(frozenset((u, v)))
        return cls(tuple(vertices), frozenset(es))

    def neighbors(self, v: Label) -> set:
        return {w for e in self.edges if v in e for w in e if w != v}

    def degree(self, v: Label) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, u: Label, v: Label) -> bool:
        return frozenset((u, v)) in self.edges

    def index(self, v: Label) -> int:
        """1-based variable index of a vertex."""
        return self.vertices.index(v) + 1

    def sorted_edges(self) -> list[tuple]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        out = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(out, key=lambda e: (pos[e[0]], pos[e[1]]))

    def complement(self) -> "SimpleGraph":
        return SimpleGraph.build(
            self.vertices,
            [(u, v) for u, v in combinations(self.vertices, 2) if not self.has_edge(u, v)],
        )

    def variable_map(self) -> list[str]:
        return [f"x{i} = {v}" for i, v in enumerate(self.vertices, start=1)]


# --- families ---------------------------------------------------------------

def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return SimpleGraph.build(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return SimpleGraph.build(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return SimpleGraph.build(range(1, n + 1), combinations(range(1, n + 1), 2))


def wheel(n: int) -> SimpleGraph:
    """Rim cycle 1..n-1 and hub n."""
    if n < 4:
        raise GraphError("wheel needs n >= 4")
    rim = cycle(n - 1)
    return SimpleGraph.build(
        list(rim.vertices) + [n],
        [tuple(e) for e in rim.edges] + [(i, n) for i in range(1, n)],
    )


def helm(n: int) -> SimpleGraph:
    """Rim 1..n, hub n+1, pendant n+1+i hanging off rim vertex i.

    Any n >= 3 is accepted; odd n >= 5 is the family of most interest.
    """
    if n < 3:
        raise GraphError("helm needs n >= 3")
    W = wheel(n + 1)
    return SimpleGraph.build(
        list(W.vertices) + list(range(n + 2, 2 * n + 2)),
        [tuple(e) for e in W.edges] + [(i, n + 1 + i) for i in range(1, n + 1)],
    )


def kss_label(i: int, j: int) -> str:
    return f"v{i}_{j % 3}"


def kss_graph(n: int) -> SimpleGraph:
    """P_n x K_3 plus the three wrap edges (0, j)-(n-1, -j).

    Vertices v{i}_{j} in row-major order (i, then j).
    """
    if n < 4:
        raise GraphError("kss graph needs n >= 4")
    verts = [kss_label(i, j) for i in range(n) for j in range(3)]
    edges = []
    for j in range(3):
        edges += [(kss_label(i, j), kss_label(i + 1, j)) for i in range(n - 1)]
        edges.append((kss_label(0, j), kss_label(n - 1, -j)))
    for i in range(n):
        edges += [(kss_label(i, a), kss_label(i, b)) for a, b in ((0, 1), (1, 2), (0, 2))]
    return SimpleGraph.build(verts, edges)


def add_leaf(G: SimpleGraph, v: Label, w: Label) -> SimpleGraph:
    if v not in G.vertices:
        raise GraphError(f"{v} is not a vertex")
    if w in G.vertices:
        raise GraphError(f"{w} is already a vertex")
    return SimpleGraph(G.vertices + (w,), G.edges | {frozenset((v, w))})


def delete_vertex(G: SimpleGraph, v: Label) -> SimpleGraph:
    if v not in G.vertices:
        raise GraphError(f"{v} is not a vertex")
    return SimpleGraph(
        tuple(u for u in G.vertices if u != v),
        frozenset(e for e in G.edges if v not in e),
    )


# --- covers and ideals ------------------------------------------------------

def minimal_vertex_covers(G: SimpleGraph) -> list[frozenset]:
    """All inclusion-minimal vertex covers.

    Branch on an uncovered edge {u, v}: either u joins the cover, or u is
    excluded, which forces all its neighbours in. Leaves that are covers
    get a minimality check (every vertex keeps a private edge).
    """
    pos = {v: i for i, v in enumerate(G.vertices)}
    adj = {v: G.neighbors(v) for v in G.vertices}
    edges = G.sorted_edges()
    found: set[frozenset] = set()

    def is_minimal(cover: frozenset) -> bool:
        return all(any(u not in cover for u in adj[v]) for v in cover)

    def branch(cover: frozenset, banned: frozenset) -> None:
        uncovered = next(((u, v) for u, v in edges if u not in cover and v not in cover), None)
        if uncovered is None:
            if is_minimal(cover):
                found.add(cover)
            return
        u, v = uncovered
        if u not in banned:
            branch(cover | {u}, banned)
        if u not in cover:
            forced = adj[u] - cover
            if not forced & banned:
                branch(cover | forced, banned | {u})

    branch(frozenset(), frozenset())
    return sorted(found, key=lambda c: (len(c), sorted(pos[v] for v in c)))


def _ambient(G: SimpleGraph, variables: Sequence[Label] | None) -> dict:
    order = list(G.vertices) if variables is None else list(variables)
    missing = set(G.vertices) - set(order)
    if missing:
        raise GraphError(f"variable order misses vertices {sorted(map(str, missing))}")
    return {v: i for i, v in enumerate(order)}, len(order)


def cover_ideal(G: SimpleGraph, variables: Sequence[Label] | None = None) -> MonomialIdeal:
    """J(G); ``variables`` fixes the ambient variable order (default: G's vertices)."""
    idx, dim = _ambient(G, variables)
    gens = []
    for cover in minimal_vertex_covers(G):
        v = [0] * dim
        for u in cover:
            v[idx[u]] = 1
        gens.append(v)
    if not gens:
        gens = [[0] * dim]
    return minimalize(gens, dim)


def edge_ideal(G: SimpleGraph, variables: Sequence[Label] | None = None) -> MonomialIdeal:
    idx, dim = _ambient(G, variables)
    gens = []
    for u, w in G.sorted_edges():
        v = [0] * dim
        v[idx[u]] = v[idx[w]] = 1
        gens.append(v)
    return minimalize(gens, dim)


def has_induced_odd_hole(G: SimpleGraph) -> list | None:
    """An induced cycle of odd length >= 5, or None."""
    order = {v: i for i, v in enumerate(G.vertices)}
    adj = {v: G.neighbors(v) for v in G.vertices}

    def extend(pathv: list, onpath: set):
        last = pathv[-1]
        start = pathv[0]
        for w in adj[last]:
            if w in onpath or order[w] <= order[start]:
                continue
            # w may touch only `last` and possibly `start` among path vertices
            if any(w in adj[p] for p in pathv[1:-1]):
                continue
            if len(pathv) >= 2 and w in adj[start]:
                length = len(pathv) + 1
                if length >= 5 and length % 2 == 1:
                    return pathv + [w]
                continue
            res = extend(pathv + [w], onpath | {w})
            if res:
                return res
        return None

    for s in G.vertices:
        res = extend([s], {s})
        if res:
            return res
    return None


def is_perfect(G: SimpleGraph, limit: int = 16) -> bool:
    """No induced odd hole (length >= 5) in G or its complement."""
    if len(G.vertices) > limit:
        raise GraphError(f"exhaustive odd-hole search limited to {limit} vertices")
    return has_induced_odd_hole(G) is None and has_induced_odd_hole(G.complement()) is None


# --- file format ------------------------------------------------------------

def format_graph(G: SimpleGraph) -> str:
    lines = ["vertices " + " ".join(str(v) for v in G.vertices)]
    lines += [f"edge {u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    verts: list[str] = []
    edges = []
    for raw in text.splitlines():
        ln = raw.split("#", 1)[0].split()
        if not ln:
            continue
        if ln[0] == "vertices":
            verts = ln[1:]
        elif ln[0] == "edge" and len(ln) == 3:
            edges.append((ln[1], ln[2]))
        else:
            raise GraphError(f"bad graph line {raw!r}")
    labels = [int(v) if v.isdigit() else v for v in verts]
    conv = {str(v): v for v in labels}
    try:
        edges = [(conv[u], conv[v]) for u, v in edges]
    except KeyError as exc:
        raise GraphError(f"edge uses undeclared vertex {exc.args[0]}") from None
    return SimpleGraph.build(labels, edges)
