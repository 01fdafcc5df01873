"""Exact tools for integral closure and normality of monomial ideals."""

from .monomials import (
    MonomialIdeal,
    colon_ideal,
    colon_monomial,
    contains_ideal,
    contains_monomial_power,
    divides,
    equals,
    extend,
    ideal_sum,
    intersect,
    minimalize,
    power,
    product,
    substitute_one,
    support,
)
from .closure import (
    ClosureGap,
    closure_power_generators,
    is_integrally_closed,
    is_normal_up_to,
    member_lp,
    member_of_closure_power,
    newton_polyhedron,
    strong_persistence_holds,
)

__version__ = "0.1.0"
