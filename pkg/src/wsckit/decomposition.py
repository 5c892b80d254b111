"""Primary decomposition of monomial ideals and the invariants read off it.

The decomposition is computed by the splitting rule: a minimal generator
``m = u * v`` with ``u = x_i^{a_i}`` and ``gcd(u, v) = 1`` gives
``I = (I + u) cap (I + v)`` with ``m`` replaced.  Leaves are generated by pure
powers (irreducible ideals).  Redundant leaves are dropped and leaves with the
same radical are intersected into one primary component.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Sequence

from .errors import DegenerateIdeal, ResourceLimit
from .monomial import (
    Graph,
    MonomialIdeal,
    colon,
    intersect,
    is_pure_power,
    power,
    saturate,
    weight_ideal,
)

MAX_SPLIT_NODES = 200_000
MAX_WITNESS_BOX = 500_000


@dataclass(frozen=True, order=True)
class PrimeIdeal:
    """``(x_i : i in variables)``."""

    n: int
    variables: tuple[int, ...]

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, (tuple(int(j == i) for j in range(self.n)) for i in self.variables))

    @property
    def height(self) -> int:
        return len(self.variables)

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i + 1}" for i in self.variables) + ")"


@dataclass(frozen=True)
class PrimaryComponent:
    """A primary component and the irreducible (pure-power) ideals it was merged from."""

    ideal: MonomialIdeal
    radical: PrimeIdeal
    irreducible: tuple[MonomialIdeal, ...]

    @property
    def gens(self):
        return self.ideal.gens

    def is_irreducible(self) -> bool:
        return len(self.irreducible) == 1

    def to_json(self) -> dict:
        return {"radical": list(self.radical.variables), "gens": [list(g) for g in self.gens]}


@dataclass(frozen=True)
class Decomposition:
    n: int
    components: tuple[PrimaryComponent, ...]

    def ideals(self) -> list[MonomialIdeal]:
        return [c.ideal for c in self.components]

    def irreducible_components(self) -> list[MonomialIdeal]:
        return [q for c in self.components for q in c.irreducible]

    def primes(self) -> frozenset[PrimeIdeal]:
        return frozenset(c.radical for c in self.components)

    def intersection(self) -> MonomialIdeal:
        return intersect(*self.ideals())

    def to_json(self) -> dict:
        return {"n": self.n, "components": [c.to_json() for c in self.components]}


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero():
        raise DegenerateIdeal("the zero ideal has no primary decomposition here")
    if ideal.is_unit():
        raise DegenerateIdeal("the unit ideal has no primary decomposition")


def _leaves(ideal: MonomialIdeal, budget: list[int]) -> set[tuple[int, ...]]:
    """Pure-power leaves as exponent vectors (``0`` = variable absent)."""
    memo: dict[tuple, set[tuple[int, ...]]] = {}
    n = ideal.n

    def rec(gens: tuple[tuple[int, ...], ...]) -> set[tuple[int, ...]]:
        hit = memo.get(gens)
        if hit is not None:
            return hit
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceLimit("primary decomposition split budget exhausted")
        m = next((g for g in gens if not is_pure_power(g)), None)
        if m is None:
            leaf = [0] * n
            for g in gens:
                i = next(j for j, e in enumerate(g) if e)
                leaf[i] = g[i]
            out = {tuple(leaf)}
        else:
            i = next(j for j, e in enumerate(m) if e)
            u = tuple(m[i] if j == i else 0 for j in range(n))
            v = tuple(0 if j == i else m[j] for j in range(n))
            rest = [g for g in gens if g != m]
            left = MonomialIdeal(n, rest + [u]).gens
            right = MonomialIdeal(n, rest + [v]).gens
            out = rec(left) | rec(right)
        memo[gens] = out
        return out

    return rec(ideal.gens)


def _leaf_contains(big: Sequence[int], small: Sequence[int]) -> bool:
    """Does the pure-power ideal ``big`` contain ``small``?"""
    return all(b and b <= s for b, s in zip(big, small) if s)


def _leaf_ideal(leaf: Sequence[int]) -> MonomialIdeal:
    n = len(leaf)
    return MonomialIdeal(n, (tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(leaf) if a))


def irreducible_decomposition(ideal: MonomialIdeal) -> list[MonomialIdeal]:
    """Irredundant intersection of pure-power ideals equal to ``ideal``."""
    _require_proper_nonzero(ideal)
    leaves = sorted(_leaves(ideal, [MAX_SPLIT_NODES]))
    kept = [q for q in leaves if not any(p != q and _leaf_contains(q, p) for p in leaves)]
    return [_leaf_ideal(q) for q in kept]


def primary_decomposition(ideal: MonomialIdeal, check: bool = True) -> Decomposition:
    """Irredundant primary decomposition with one component per associated prime."""
    irreducible = irreducible_decomposition(ideal)
    groups: dict[tuple[int, ...], list[MonomialIdeal]] = {}
    for q in irreducible:
        groups.setdefault(q.support(), []).append(q)
    comps = [
        PrimaryComponent(intersect(*qs), PrimeIdeal(ideal.n, rad), tuple(qs))
        for rad, qs in sorted(groups.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]
    dec = Decomposition(ideal.n, tuple(comps))
    if check and dec.intersection() != ideal:
        raise AssertionError(f"decomposition of {ideal} does not intersect back to it")
    return dec


def is_irredundant(dec: Decomposition) -> bool:
    ideals = dec.ideals()
    if len(ideals) == 1:
        return True
    full = intersect(*ideals)
    for k in range(len(ideals)):
        rest = intersect(*(ideals[:k] + ideals[k + 1:]))
        if rest == full:
            return False
    return True


def associated_primes(ideal: MonomialIdeal) -> frozenset[PrimeIdeal]:
    return primary_decomposition(ideal).primes()


def witness_primes(ideal: MonomialIdeal, cap: int = MAX_WITNESS_BOX) -> dict[PrimeIdeal, tuple[int, ...]]:
    """Primes of the form ``I : m`` for monomials ``m`` dividing the generator lcm.

    Returns one witness monomial per prime found.
    """
    _require_proper_nonzero(ideal)
    top = ideal.lcm()
    if prod(t + 1 for t in top) > cap:
        raise ResourceLimit(f"witness search box exceeds {cap} monomials")
    found: dict[PrimeIdeal, tuple[int, ...]] = {}
    for m in product(*(range(t + 1) for t in top)):
        if ideal.contains(m):
            continue
        q = colon(ideal, m)
        if all(sum(g) == 1 for g in q.gens):
            p = PrimeIdeal(ideal.n, tuple(sorted(next(i for i, e in enumerate(g) if e) for g in q.gens)))
            found.setdefault(p, m)
    return found


def minimal_and_embedded(ideal: MonomialIdeal) -> tuple[frozenset[PrimeIdeal], frozenset[PrimeIdeal]]:
    ass = associated_primes(ideal)
    minimal = frozenset(
        p for p in ass if not any(q != p and set(q.variables) <= set(p.variables) for q in ass)
    )
    return minimal, ass - minimal


def minimal_primes(ideal: MonomialIdeal) -> frozenset[PrimeIdeal]:
    return minimal_and_embedded(ideal)[0]


def height(ideal: MonomialIdeal) -> int:
    if ideal.is_zero():
        return 0
    return min(p.height for p in minimal_primes(ideal))


@dataclass
class WeightedDecompositionReport:
    ok: bool
    expected: list[MonomialIdeal]
    actual: list[MonomialIdeal]
    mismatches: list[str] = field(default_factory=list)


def weighted_decomposition_check(ideal: MonomialIdeal, w: Sequence[int]) -> WeightedDecompositionReport:
    """Compare the decomposition of ``(I, w)`` with the weighted components of ``I``."""
    expected = [weight_ideal(q, w) for q in primary_decomposition(ideal).ideals()]
    actual = primary_decomposition(weight_ideal(ideal, w)).ideals()
    exp_set, act_set = set(expected), set(actual)
    mismatches = [f"missing component {q}" for q in expected if q not in act_set]
    mismatches += [f"unexpected component {q}" for q in actual if q not in exp_set]
    return WeightedDecompositionReport(not mismatches, expected, actual, mismatches)


def symbolic_power(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    """``I^(s)``: intersect, over minimal primes ``P``, ``I^s`` saturated by the variables outside ``P``."""
    _require_proper_nonzero(ideal)
    ps = power(ideal, s)
    parts = []
    for p in sorted(minimal_primes(ideal)):
        outside = tuple(0 if i in p.variables else 1 for i in range(ideal.n))
        parts.append(saturate(ps, outside))
    return intersect(*parts)


@dataclass
class NTFVerdict:
    """Bounded normal-torsion-freeness probe; ``holds`` means "up to ``max_power``"."""

    max_power: int
    base_primes: frozenset[PrimeIdeal]
    new_primes: dict[int, frozenset[PrimeIdeal]]

    @property
    def holds(self) -> bool:
        return not any(self.new_primes.values())

    @property
    def first_failure(self) -> int | None:
        return next((k for k in sorted(self.new_primes) if self.new_primes[k]), None)

    def to_json(self) -> dict:
        return {
            "max_power": self.max_power,
            "holds_up_to_max_power": self.holds,
            "first_failure": self.first_failure,
            "per_power": [
                {"k": k, "ok": not v, "new_primes": [list(p.variables) for p in sorted(v)]}
                for k, v in sorted(self.new_primes.items())
            ],
        }


def normally_torsion_free_upto(ideal: MonomialIdeal, max_power: int) -> NTFVerdict:
    if max_power < 1:
        raise ValueError("max_power must be >= 1")
    base = associated_primes(ideal)
    new = {}
    for k in range(1, max_power + 1):
        new[k] = associated_primes(power(ideal, k)) - base
    return NTFVerdict(max_power, base, new)


def is_bipartite(g: Graph) -> bool:
    colour: dict[int, int] = {}
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    for start in range(g.n):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True
