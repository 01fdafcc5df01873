"""Reference data: ideals in text form and the known Hilbert basis of the L_5 Rees cone."""

from __future__ import annotations

from typing import Callable

from . import constructions as C
from .graphs import cover_ideal, edge_ideal, cycle, helm, kss_graph
from .monomials import format_ideal

# Hilbert basis of the Rees cone of L_5, degree coordinate last.
HB_L5_TEXT = """\
0 0 0 0 0 0 1 0
0 0 0 0 0 1 0 0
0 0 0 0 1 0 0 0
0 0 0 1 0 0 0 0
0 0 0 1 1 1 0 1
0 0 1 0 0 0 0 0
0 0 1 1 0 1 0 1
0 1 0 0 0 0 0 0
0 1 0 1 1 0 1 1
0 1 1 0 0 1 0 1
0 1 1 0 1 0 1 1
1 0 0 0 0 0 0 0
1 0 0 0 1 1 0 1
1 0 1 0 1 0 1 1
1 0 1 1 0 0 1 1
1 1 0 0 0 1 0 1
1 1 0 1 0 0 1 1
1 1 1 1 1 1 1 2
"""


def hb_l5_rows() -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in ln.split()) for ln in HB_L5_TEXT.splitlines() if ln.strip()]


FIXTURES: dict[str, tuple[str, Callable[[], str]]] = {
    "hb-L5": ("Hilbert basis of the Rees cone of L5 (18 rows)", lambda: HB_L5_TEXT),
    "J-C5": ("cover ideal of the 5-cycle", lambda: format_ideal(cover_ideal(cycle(5)))),
    "I-C5": ("edge ideal of the 5-cycle", lambda: format_ideal(edge_ideal(cycle(5)))),
    "L3": ("L_3", lambda: format_ideal(C.build_L_n(3).ideal)),
    "L4": ("L_4", lambda: format_ideal(C.build_L_n(4).ideal)),
    "L5": ("L_5", lambda: format_ideal(C.build_L_n(5).ideal)),
    "L6": ("L_6", lambda: format_ideal(C.build_L_n(6).ideal)),
    "L7": ("L_7", lambda: format_ideal(C.build_L_n(7).ideal)),
    "T": ("T = x6 F + x7 I", lambda: format_ideal(C.build_T().ideal)),
    "F": ("the ideal F inside T", lambda: format_ideal(C.build_T().extras["F"])),
    "Q": ("two C5 cover ideals in disjoint variables", lambda: format_ideal(C.build_Q().ideal)),
    "J-H4": ("cover ideal of kss_graph(4)", lambda: format_ideal(cover_ideal(kss_graph(4)))),
    "J-H4-minus": ("cover ideal of kss_graph(4) minus v0_1, kss_graph(4) variables",
                   lambda: format_ideal(C.build_H4_minus().ideal)),
    "J-helm5": ("cover ideal of helm(5)", lambda: format_ideal(cover_ideal(helm(5)))),
}


def export_fixture(name: str, path=None) -> str:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}")
    text = FIXTURES[name][1]()
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text
