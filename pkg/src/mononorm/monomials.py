"""Monomial ideals represented by their minimal exponent vectors.

A monomial x1^a1 ... xn^an is the tuple ``(a1, ..., an)``. An ideal is the
antichain of its minimal generators together with an explicit ambient
dimension; the dimension is never inferred from the generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

Exponent = tuple[int, ...]


class DimensionError(ValueError):
    """Vectors or ideals living in different ambient rings were combined."""


def _check_len(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")


def grlex_key(a: Exponent) -> tuple:
    """Graded lex with x1 > x2 > ... > xn: lower degree first, then x1-heavy first."""
    return (sum(a), tuple(-x for x in a))


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff x^a divides x^b."""
    _check_len(a, b)
    return all(x <= y for x, y in zip(a, b))


def support(a: Sequence[int]) -> frozenset[int]:
    """1-based indices of the variables occurring in x^a."""
    return frozenset(i + 1 for i, x in enumerate(a) if x > 0)


def vadd(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def vlcm(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def vquot(a: Sequence[int], b: Sequence[int]) -> Exponent:
    """Exponent of x^a / gcd(x^a, x^b)."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def scale(a: Sequence[int], k: int) -> Exponent:
    return tuple(k * x for x in a)


def unit_vector(dim: int, i: int) -> Exponent:
    """e_i with a 1-based index."""
    if not 1 <= i <= dim:
        raise IndexError(f"variable index {i} out of range 1..{dim}")
    return tuple(1 if j == i - 1 else 0 for j in range(dim))


def indicator(dim: int, indices: Iterable[int]) -> Exponent:
    idx = set(indices)
    for i in idx:
        if not 1 <= i <= dim:
            raise IndexError(f"variable index {i} out of range 1..{dim}")
    return tuple(1 if j + 1 in idx else 0 for j in range(dim))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators G(I).

    Construct through :func:`minimalize` (or :meth:`from_generators`) unless
    the generators are already a canonically ordered antichain.
    """

    dim: int
    gens: tuple[Exponent, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("ambient dimension must be positive")
        for g in self.gens:
            if len(g) != self.dim:
                raise DimensionError(f"generator {g} does not have length {self.dim}")
            if any(x < 0 for x in g):
                raise ValueError(f"negative exponent in {g}")

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], dim: int) -> "MonomialIdeal":
        return minimalize(gens, dim)

    @classmethod
    def zero(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, ())

    @classmethod
    def unit(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, ((0,) * dim,))

    @classmethod
    def principal(cls, m: Sequence[int]) -> "MonomialIdeal":
        return cls(len(m), (tuple(m),))

    @classmethod
    def variables(cls, dim: int, indices: Iterable[int]) -> "MonomialIdeal":
        """The prime (x_i : i in indices)."""
        return minimalize((unit_vector(dim, i) for i in indices), dim)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    def max_exponents(self) -> Exponent:
        """Coordinatewise maximum over the generators."""
        if not self.gens:
            return (0,) * self.dim
        return tuple(max(col) for col in zip(*self.gens))

    def contains(self, a: Sequence[int]) -> bool:
        """Membership of the monomial x^a."""
        _check_len(a, (0,) * self.dim)
        return any(all(g <= x for g, x in zip(gen, a)) for gen in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


def minimalize(raw: Iterable[Sequence[int]], dim: int) -> MonomialIdeal:
    """Reduce a generating set to the divisibility-minimal antichain."""
    vecs = set()
    for v in raw:
        v = tuple(int(x) for x in v)
        if len(v) != dim:
            raise DimensionError(f"vector {v} does not have length {dim}")
        vecs.add(v)
    ordered = sorted(vecs, key=grlex_key)
    kept: list[Exponent] = []
    for v in ordered:
        # anything dividing v sorts before it in graded order
        if not _divisible_by_any(v, kept):
            kept.append(v)
    return MonomialIdeal(dim, tuple(kept))


def _divisible_by_any(v: Exponent, gens: Sequence[Exponent]) -> bool:
    for g in gens:
        for gi, vi in zip(g, v):
            if gi > vi:
                break
        else:
            return True
    return False


def _same_dim(I: MonomialIdeal, J: MonomialIdeal) -> int:
    if I.dim != J.dim:
        raise DimensionError(f"ideals live in dimensions {I.dim} and {J.dim}")
    return I.dim


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_dim(I, J)
    return I.gens == J.gens


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff J is a subset of I."""
    _same_dim(I, J)
    return all(_divisible_by_any(g, I.gens) for g in J.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    dim = _same_dim(I, J)
    return minimalize(I.gens + J.gens, dim)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    dim = _same_dim(I, J)
    return minimalize((vadd(a, b) for a in I.gens for b in J.gens), dim)


def monomial_times(m: Sequence[int], I: MonomialIdeal) -> MonomialIdeal:
    """The ideal x^m * I."""
    return product(MonomialIdeal.principal(m), I)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("power requires k >= 1; use MonomialIdeal.unit for I^0")
    return _power_cached(I, k)


@lru_cache(maxsize=256)
def _power_cached(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k == 1:
        return I
    half = _power_cached(I, k // 2)
    sq = product(half, half)
    return product(sq, I) if k % 2 else sq


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    dim = _same_dim(I, J)
    return minimalize((vlcm(a, b) for a in I.gens for b in J.gens), dim)


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("empty intersection")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def colon_monomial(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """(I : x^m)."""
    if len(m) != I.dim:
        raise DimensionError(f"monomial {tuple(m)} does not have length {I.dim}")
    return minimalize((vquot(g, m) for g in I.gens), I.dim)


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J), the intersection of (I : g) over g in G(J)."""
    _same_dim(I, J)
    if J.is_zero:
        raise ValueError("colon by the zero ideal")
    return intersect_all([colon_monomial(I, g) for g in J.gens])


def substitute_one(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Set x_i = 1 (1-based); the coordinate stays, always 0."""
    if not 1 <= i <= I.dim:
        raise IndexError(f"variable index {i} out of range 1..{I.dim}")
    return minimalize((g[: i - 1] + (0,) + g[i:] for g in I.gens), I.dim)


def extend(I: MonomialIdeal, new_dim: int) -> MonomialIdeal:
    """Embed I into a polynomial ring with extra trailing variables."""
    if new_dim < I.dim:
        raise DimensionError(f"cannot extend dimension {I.dim} down to {new_dim}")
    pad = (0,) * (new_dim - I.dim)
    return MonomialIdeal(new_dim, tuple(g + pad for g in I.gens))


def embed(I: MonomialIdeal, positions: Sequence[int], new_dim: int) -> MonomialIdeal:
    """Send variable j of I to variable positions[j-1] (1-based) of the new ring."""
    if len(positions) != I.dim:
        raise DimensionError("need one target position per variable")
    gens = []
    for g in I.gens:
        v = [0] * new_dim
        for x, p in zip(g, positions):
            v[p - 1] = x
        gens.append(v)
    return minimalize(gens, new_dim)


def contains_monomial_power(I: MonomialIdeal, a: Sequence[int], k: int) -> bool:
    """Decide x^a in I^k without forming I^k.

    Depth-first search for a multiset of k generators whose sum is
    componentwise <= a, generators taken in non-increasing index order so
    each multiset is visited once. Failures are memoized on
    (residual, remaining count, next index).
    """
    a = tuple(a)
    _check_len(a, (0,) * I.dim)
    if k < 1:
        raise ValueError("k must be positive")
    if I.is_zero:
        return False
    gens = sorted(I.gens, key=lambda g: (-sum(g), g))
    mindeg = min(sum(g) for g in gens)
    failed: set[tuple] = set()

    def search(res: Exponent, left: int, start: int) -> bool:
        if left == 0:
            return True
        if left * mindeg > sum(res):
            return False
        key = (res, left, start)
        if key in failed:
            return False
        for idx in range(start, len(gens)):
            g = gens[idx]
            if all(x <= y for x, y in zip(g, res)):
                if search(tuple(y - x for x, y in zip(g, res)), left - 1, idx):
                    return True
        failed.add(key)
        return False

    return search(a, k, 0)


# --- text I/O -----------------------------------------------------------

def monomial_str(a: Sequence[int]) -> str:
    parts = []
    for i, x in enumerate(a, start=1):
        if x == 1:
            parts.append(f"x{i}")
        elif x > 1:
            parts.append(f"x{i}^{x}")
    return "*".join(parts) if parts else "1"


_SYMBOL = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, dim: int) -> Exponent:
    """Parse ``x1*x2^3*x6`` (or ``1``) into an exponent vector."""
    text = text.strip()
    v = [0] * dim
    if text == "1":
        return tuple(v)
    for factor in text.split("*"):
        m = _SYMBOL.match(factor.strip())
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(m.group(1))
        if not 1 <= i <= dim:
            raise IndexError(f"variable x{i} outside dimension {dim}")
        v[i - 1] += int(m.group(2) or 1)
    return tuple(v)


def format_ideal(I: MonomialIdeal) -> str:
    """Exponent text form: ``dim n`` then one generator per line."""
    lines = [f"dim {I.dim}"]
    lines += [" ".join(str(x) for x in g) for g in I.gens]
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> MonomialIdeal:
    """Read the exponent form; lines written as ``x1*x2`` are accepted too."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("dim"):
        raise ValueError("ideal file must start with 'dim n'")
    try:
        dim = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError(f"bad header line {lines[0]!r}") from None
    gens = []
    for ln in lines[1:]:
        if ln[0] == "x" or ln == "1":
            gens.append(parse_monomial(ln, dim))
        else:
            vec = tuple(int(t) for t in ln.split())
            if len(vec) != dim:
                raise DimensionError(f"generator line {ln!r} does not have {dim} entries")
            gens.append(vec)
    return minimalize(gens, dim)


def read_ideal(path) -> MonomialIdeal:
    with open(path) as fh:
        return parse_ideal(fh.read())


def write_ideal(I: MonomialIdeal, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_ideal(I))
