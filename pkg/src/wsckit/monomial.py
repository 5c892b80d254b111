"""Monomials and monomial ideals in ``k[x_1, ..., x_n]``.

A monomial is its exponent tuple.  A :class:`MonomialIdeal` always stores its
minimal generating set, sorted by total degree and then lexicographically
with ``x_1`` largest.  The zero ideal has no generators; the unit ideal has
the single generator ``(0, ..., 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import ArityMismatch, InvalidExponent, InvalidVertex, InvalidWeight, ResourceLimit
from .wreath import WreathVertexMap

Monomial = tuple

MAX_EXPONENT = 2**31 - 1
MAX_POWER_GENERATORS = 20000


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(min(x, y) for x, y in zip(a, b))


def mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in out):
        raise InvalidExponent("exponent overflow")
    return out


def colon_monomial(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """``x^a : x^b = x^max(a - b, 0)``."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def support(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(a) if e)


def is_pure_power(a: Sequence[int]) -> bool:
    return sum(1 for e in a if e) == 1


def grlex_key(a: Sequence[int]):
    return (sum(a), tuple(-e for e in a))


def _minimal(gens: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    kept: list[tuple[int, ...]] = []
    for g in sorted(set(gens), key=grlex_key):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = ()):
        clean = []
        for g in gens:
            g = tuple(int(e) for e in g)
            if len(g) != n:
                raise ArityMismatch(f"generator {g} has arity {len(g)}, expected {n}")
            if any(e < 0 for e in g):
                raise InvalidExponent(f"negative exponent in {g}")
            if any(e > MAX_EXPONENT for e in g):
                raise InvalidExponent(f"exponent overflow in {g}")
            clean.append(g)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(_minimal(clean)))

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [(0,) * n])

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, [])

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def contains(self, m: Sequence[int]) -> bool:
        return any(divides(g, m) for g in self.gens)

    __contains__ = contains

    def issubset(self, other: "MonomialIdeal") -> bool:
        _same_arity(self, other)
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return self.issubset(other)

    def lcm(self) -> tuple[int, ...]:
        return reduce(lcm, self.gens, (0,) * self.n)

    def max_exponents(self) -> tuple[int, ...]:
        return self.lcm()

    def support(self) -> tuple[int, ...]:
        return support(self.lcm())

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal(self.n, (tuple(1 if e else 0 for e in g) for g in self.gens))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_arity(self, other)
        return MonomialIdeal(self.n, self.gens + other.gens)

    def __str__(self) -> str:
        return format_ideal(self)

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}


def _same_arity(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.n != b.n:
        raise ArityMismatch(f"ideals in {a.n} and {b.n} variables")


def format_monomial(a: Sequence[int], names: Sequence[str] | None = None) -> str:
    names = names or [f"x{i + 1}" for i in range(len(a))]
    parts = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(a) if e]
    return "*".join(parts) if parts else "1"


def format_ideal(ideal: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    if not ideal.gens:
        return "(0)"
    return "(" + ", ".join(format_monomial(g, names) for g in ideal.gens) + ")"


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise ArityMismatch("cannot infer arity from an empty generator list")
        n = len(gens[0])
    return MonomialIdeal(n, gens)


def check_weights(w: Sequence[int], n: int) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if len(w) != n:
        raise ArityMismatch(f"{len(w)} weights for {n} variables")
    if any(x < 1 for x in w):
        raise InvalidWeight(f"weights must be positive integers, got {w}")
    return w


def weight_monomial(a: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    return tuple(e * x for e, x in zip(a, w))


def weight_ideal(ideal: MonomialIdeal, w: Sequence[int]) -> MonomialIdeal:
    """Scale every generator exponent vector by ``w`` componentwise."""
    w = check_weights(w, ideal.n)
    return MonomialIdeal(ideal.n, (weight_monomial(g, w) for g in ideal.gens))


def polarize_ideal(
    ideal: MonomialIdeal, widths: Sequence[int] | None = None
) -> tuple[MonomialIdeal, WreathVertexMap]:
    """Squarefree polarization: ``x_i^a`` becomes ``x_{i,1} ... x_{i,a}``.

    The new ring has ``widths[i]`` variables for ``x_i`` (default: the largest
    exponent of ``x_i`` among the generators), laid out consecutively.
    """
    top = ideal.max_exponents()
    if widths is None:
        widths = top
    widths = tuple(int(x) for x in widths)
    if len(widths) != ideal.n:
        raise ArityMismatch(f"{len(widths)} widths for {ideal.n} variables")
    if any(w < t for w, t in zip(widths, top)):
        raise InvalidExponent(f"widths {widths} smaller than maximal exponents {top}")
    vmap = WreathVertexMap(widths)
    gens = []
    for g in ideal.gens:
        new = [0] * vmap.total
        for i, e in enumerate(g):
            for j in range(e):
                new[vmap.copy_id(i, j)] = 1
        gens.append(new)
    return MonomialIdeal(vmap.total, gens), vmap


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    if not ideals:
        raise ValueError("intersection of no ideals")
    out = ideals[0]
    for other in ideals[1:]:
        _same_arity(out, other)
        out = MonomialIdeal(out.n, (lcm(g, h) for g in out.gens for h in other.gens))
    return out


def colon(ideal: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    m = tuple(m)
    if len(m) != ideal.n:
        raise ArityMismatch(f"monomial arity {len(m)} vs ideal arity {ideal.n}")
    return MonomialIdeal(ideal.n, (colon_monomial(g, m) for g in ideal.gens))


def saturate(ideal: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """``I : m^infinity`` by repeated colon until the ideal stops growing."""
    cur = ideal
    while True:
        nxt = colon(cur, m)
        if nxt == cur:
            return cur
        cur = nxt


def power(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise InvalidExponent(f"power exponent {s} < 1")
    out = ideal
    for _ in range(s - 1):
        out = MonomialIdeal(ideal.n, (mul(g, h) for g in out.gens for h in ideal.gens))
        if len(out.gens) > MAX_POWER_GENERATORS:
            raise ResourceLimit(f"power has more than {MAX_POWER_GENERATORS} generators")
    return out


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        clean = set()
        for e in edges:
            a, b = (int(x) for x in e)
            if a == b:
                raise InvalidVertex(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidVertex(f"edge {(a, b)} out of range for n={n}")
            clean.add((min(a, b), max(a, b)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(clean)))

    def neighbours(self, v: int) -> list[int]:
        return [b if a == v else a for a, b in self.edges if v in (a, b)]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def edge_ideal(g: Graph, w: Sequence[int] | None = None) -> MonomialIdeal:
    gens = []
    for a, b in g.edges:
        e = [0] * g.n
        e[a] = e[b] = 1
        gens.append(e)
    ideal = MonomialIdeal(g.n, gens)
    return ideal if w is None else weight_ideal(ideal, w)
