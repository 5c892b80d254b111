"""Exact (exponential, bounded) deciders for combinatorial properties of complexes.

* vertex decomposability (non-pure version), with a shedding sequence;
* shellability (non-pure condition on facet orders), with a shelling order;
* constructibility (pure complexes), three-valued: True / False / None (unknown);
* Cohen-Macaulayness via Reisner's criterion over Q or GF(p).

Searches raise :class:`ResourceLimit` when a configured bound is exceeded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .complex import SimplicialComplex, face_of, maximal_masks, popcount
from .errors import ResourceLimit, VoidComplex
from .homology import reduced_homology_dims
from .wreath import mixed_wreath

SHELL_BOUND = 12
CONSTRUCTIBLE_BOUND = 8
VD_NODE_BUDGET = 200_000


def _key(c: SimplicialComplex) -> frozenset[int]:
    """Memo key: facets after an order-preserving compression of the used vertices."""
    used = c.vertex_mask
    if used & (used + 1) == 0:
        return frozenset(c.facet_masks)  # already 0..k-1
    index = {}
    for i, v in enumerate(face_of(used)):
        index[1 << v] = 1 << i
    out = []
    for m in c.facet_masks:
        r = 0
        while m:
            low = m & -m
            r |= index[low]
            m ^= low
        out.append(r)
    return frozenset(out)


def _require_nonvoid(c: SimplicialComplex) -> None:
    if c.is_void():
        raise VoidComplex("property checks need a nonvoid complex")


# -- vertex decomposability -------------------------------------------------


def _is_shedding(c: SimplicialComplex, v: int, deletion: SimplicialComplex) -> bool:
    """No face of the link of ``v`` is a facet of the deletion of ``v``."""
    bit = 1 << v
    faces = c.face_masks
    return not any((g | bit) in faces for g in deletion.facet_masks)


def vertex_decomposition(c: SimplicialComplex, budget: int = VD_NODE_BUDGET) -> list[int] | None:
    """Shedding vertices along the deletion chain down to a simplex, or ``None``.

    Links met along the way are certified recursively but are not part of the
    returned sequence.
    """
    _require_nonvoid(c)
    # only failures are cached: a shedding sequence is tied to concrete vertex ids
    memo: dict[frozenset[int], bool] = {}
    left = [budget]

    def vd(k: SimplicialComplex) -> list[int] | None:
        if k.is_simplex():
            return []
        key = _key(k)
        if memo.get(key) is False:
            return None
        left[0] -= 1
        if left[0] < 0:
            raise ResourceLimit("vertex decomposability search budget exhausted")
        for v in k.vertices:
            dele = k.delete_vertex(v)
            if not _is_shedding(k, v, dele):
                continue
            if vd(k.link(v)) is None:
                continue
            rest = vd(dele)
            if rest is not None:
                return [v] + rest
        memo[key] = False
        return None

    return vd(c)


def is_vertex_decomposable(c: SimplicialComplex, budget: int = VD_NODE_BUDGET) -> bool:
    return vertex_decomposition(c, budget) is not None


def replay_vertex_decomposition(c: SimplicialComplex, order: Sequence[int]) -> bool:
    """Independent re-check of a shedding sequence from :func:`vertex_decomposition`."""
    k = c
    for v in order:
        if not k.has_face(1 << v):
            return False
        dele = k.delete_vertex(v)
        if not _is_shedding(k, v, dele) or not is_vertex_decomposable(k.link(v)):
            return False
        k = dele
    return k.is_simplex()


# -- shellability -----------------------------------------------------------


def _admissible(f: int, prev: Sequence[int]) -> bool:
    """Shelling condition for appending ``f`` after the facets ``prev``."""
    near = 0  # vertices v with f \ h = {v} for some earlier h
    for h in prev:
        diff = f & ~h
        if diff and diff & (diff - 1) == 0:
            near |= diff
    return all((f & ~g) & near for g in prev)


def shelling_order(c: SimplicialComplex, bound: int = SHELL_BOUND) -> list[tuple[int, ...]] | None:
    """A shelling order of the facets, or ``None`` if there is none.

    Admissibility of the next facet depends only on the *set* of facets already
    placed, so dead sets are cached and the search runs over subsets.
    """
    _require_nonvoid(c)
    facets = list(c.facet_masks)
    t = len(facets)
    if t > bound:
        raise ResourceLimit(f"{t} facets exceeds the shellability bound {bound}")
    full = (1 << t) - 1
    dead: set[int] = set()

    def search(placed: int, order: list[int]) -> list[int] | None:
        if placed == full:
            return order
        if placed in dead:
            return None
        prev = [facets[i] for i in order]
        for j in range(t):
            if placed >> j & 1:
                continue
            if order and not _admissible(facets[j], prev):
                continue
            found = search(placed | 1 << j, order + [j])
            if found is not None:
                return found
        dead.add(placed)
        return None

    # try larger facets first; any shelling can be rearranged that way
    facets.sort(key=lambda m: -popcount(m))
    found = search(0, [])
    return None if found is None else [face_of(facets[j]) for j in found]


def is_shellable(c: SimplicialComplex, bound: int = SHELL_BOUND) -> bool:
    return shelling_order(c, bound) is not None


def is_shelling_order(order: Sequence[Sequence[int]]) -> bool:
    """Check the condition literally: for i < j some v in F_j - F_i and l < j with F_j - F_l = {v}."""
    sets = [frozenset(f) for f in order]
    for j in range(len(sets)):
        for i in range(j):
            if not any(
                any(sets[j] - sets[l] == {v} for l in range(j)) for v in sets[j] - sets[i]
            ):
                return False
    return True


# -- constructibility -------------------------------------------------------


def _and3(first: bool | None, *rest) -> bool | None:
    """Three-valued conjunction; later operands are thunks evaluated lazily."""
    acc = first
    for thunk in rest:
        if acc is False:
            return False
        v = thunk()
        if v is False:
            return False
        if v is None:
            acc = None
    return acc


def is_constructible_bounded(c: SimplicialComplex, bound: int = CONSTRUCTIBLE_BOUND) -> bool | None:
    """True / False, or ``None`` when the search needed more than ``bound`` facets.

    Both pieces of a splitting and their intersection must themselves be
    constructible.  Non-pure complexes are reported as not constructible.
    """
    _require_nonvoid(c)

    @lru_cache(maxsize=None)
    def cons(facets: frozenset[int]) -> bool | None:
        fl = sorted(facets)
        if len(fl) == 1:
            return True
        sizes = {popcount(m) for m in fl}
        if len(sizes) != 1:
            return False
        if len(fl) > bound:
            return None
        d = sizes.pop()
        if d == 1:
            return True  # any finite set of points
        unknown = False
        first, rest = fl[0], fl[1:]
        # bipartitions with fl[0] on the left, both sides nonempty
        for r in range(0, len(rest)):
            for pick in combinations(rest, r):
                a = [first, *pick]
                b = [m for m in rest if m not in pick]
                inter = maximal_masks(x & y for x in a for y in b)
                if any(popcount(m) != d - 1 for m in inter):
                    continue
                verdict = _and3(cons(frozenset(inter)), lambda: cons(frozenset(a)), lambda: cons(frozenset(b)))
                if verdict:
                    return True
                if verdict is None:
                    unknown = True
        return None if unknown else False

    return cons(frozenset(c.facet_masks))


# -- Cohen-Macaulay (Reisner) -----------------------------------------------


def _top_only(k: SimplicialComplex, char: int) -> bool:
    h = reduced_homology_dims(k, char)
    return not any(h[:-1])


def _pure_link(k: SimplicialComplex, v: int) -> SimplicialComplex:
    # in a pure complex the facets through v, minus v, already form an antichain
    bit = 1 << v
    return SimplicialComplex(k.n, [m ^ bit for m in k.facet_masks if m & bit])


def is_cohen_macaulay_reisner(c: SimplicialComplex, char: int = 0) -> bool:
    """Reisner's criterion, checked recursively through vertex links.

    ``link(F u {v}) = link_{link v}(F)``, so it suffices that the complex has
    homology only in top degree and every vertex link is again Cohen-Macaulay.
    Non-pure complexes fail immediately (the criterion forces purity).
    """
    _require_nonvoid(c)
    memo: dict[frozenset[int], bool] = {}

    def cm(k: SimplicialComplex) -> bool:
        if k.is_simplex():
            return True
        if not k.is_pure():
            return False
        key = _key(k)
        if key in memo:
            return memo[key]
        ok = _top_only(k, char) and all(cm(_pure_link(k, v)) for v in k.vertices)
        memo[key] = ok
        return ok

    return cm(c)


def is_cohen_macaulay_all_faces(c: SimplicialComplex, char: int = 0) -> bool:
    """The criterion face by face, without shortcuts (slow; used as an oracle)."""
    _require_nonvoid(c)
    for fm in c.face_masks:
        lk = c.link_of_face(fm)
        h = reduced_homology_dims(lk, char, method="faces")
        if any(h[:-1]):
            return False
    return True


# -- transport of properties through mixed wreath products --------------------

PROPERTIES = ("vertex_decomposable", "shellable", "constructible", "cohen_macaulay")


def _decide(name: str, c: SimplicialComplex, shell_bound: int, cons_bound: int, char: int) -> bool | None:
    try:
        if name == "vertex_decomposable":
            return is_vertex_decomposable(c)
        if name == "shellable":
            return is_shellable(c, shell_bound)
        if name == "constructible":
            return is_constructible_bounded(c, cons_bound)
        if name == "cohen_macaulay":
            return is_cohen_macaulay_reisner(c, char)
    except ResourceLimit:
        return None
    raise ValueError(name)


@dataclass
class TransportReport:
    base: dict[str, bool | None] = field(default_factory=dict)
    wreath: dict[str, bool | None] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    undecided: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "wreath": self.wreath,
            "violations": self.violations,
            "undecided": self.undecided,
        }


def property_transport_report(
    c: SimplicialComplex,
    d: Sequence[int],
    shell_bound: int = SHELL_BOUND,
    cons_bound: int = CONSTRUCTIBLE_BOUND,
    char: int = 0,
) -> TransportReport:
    """Decide each property on ``c`` and on its mixed wreath product and compare.

    A decided disagreement is a violation of the preservation theorem; a side
    that hit a resource bound is recorded as undecided.
    """
    w, _ = mixed_wreath(c, d)
    rep = TransportReport()
    for name in PROPERTIES:
        a = _decide(name, c, shell_bound, cons_bound, char)
        b = _decide(name, w, shell_bound, cons_bound, char)
        rep.base[name], rep.wreath[name] = a, b
        if a is None or b is None:
            rep.undecided.append(name)
        elif a != b:
            rep.violations.append(name)
    return rep


def implication_chain_violations(
    c: SimplicialComplex,
    shell_bound: int = SHELL_BOUND,
    cons_bound: int = CONSTRUCTIBLE_BOUND,
    char: int = 0,
) -> list[str]:
    """Broken links of VD => shellable => constructible => CM among decided verdicts.

    The last two links are only asserted for pure complexes.
    """
    v = {name: _decide(name, c, shell_bound, cons_bound, char) for name in PROPERTIES}
    chain = [("vertex_decomposable", "shellable")]
    if c.is_pure():
        chain += [("shellable", "constructible"), ("constructible", "cohen_macaulay"), ("shellable", "cohen_macaulay")]
    return [f"{a} but not {b}" for a, b in chain if v[a] is True and v[b] is False]
