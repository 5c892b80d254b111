"""Weighted simplicial complexes, Stanley-Reisner ideals and polarization."""

from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplicialComplex, mask_of, minimal_transversals
from .errors import NotSquarefree, VoidComplex, DegenerateIdeal
from .monomial import MonomialIdeal, check_weights
from .wreath import WreathVertexMap, mixed_wreath


@dataclass(frozen=True)
class WeightedComplex:
    complex: SimplicialComplex
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", check_weights(self.weights, self.complex.n))

    @property
    def n(self) -> int:
        return self.complex.n

    def to_json(self) -> dict:
        return {**self.complex.to_json(), "weights": list(self.weights)}


def sr_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal generated by the minimal non-faces."""
    gens = []
    for face in c.minimal_nonfaces():
        e = [0] * c.n
        for v in face:
            e[v] = 1
        gens.append(e)
    return MonomialIdeal(c.n, gens)


def sr_ideal_weighted(wc: WeightedComplex) -> MonomialIdeal:
    """Minimal non-face ``F`` contributes ``prod_{i in F} x_i^{w_i}``."""
    gens = []
    for face in wc.complex.minimal_nonfaces():
        e = [0] * wc.n
        for v in face:
            e[v] = wc.weights[v]
        gens.append(e)
    return MonomialIdeal(wc.n, gens)


def complex_from_squarefree(ideal: MonomialIdeal) -> SimplicialComplex:
    """Inverse Stanley-Reisner correspondence.

    Facets are the maximal subsets of ``range(n)`` containing no generator
    support, found as complements of minimal transversals of the supports.
    """
    if not ideal.is_squarefree():
        raise NotSquarefree(f"{ideal} is not squarefree")
    if ideal.is_unit():
        raise DegenerateIdeal("the unit ideal corresponds to the void complex")
    n = ideal.n
    supports = [mask_of(i for i, e in enumerate(g) if e) for g in ideal.gens]
    full = (1 << n) - 1
    # A face is maximal iff its complement is a minimal hitting set of the supports.
    covers = minimal_transversals(supports)
    return SimplicialComplex.from_masks(n, (full & ~t for t in covers))


def polarize(wc: WeightedComplex) -> tuple[SimplicialComplex, WreathVertexMap]:
    """Polarization of ``(complex, w)``: the mixed wreath product with ``d_i = w_i - 1``.

    The vertex ``x_{i,j}`` (``1 <= j <= w_i``) gets id ``offset_i + j - 1``.
    """
    if wc.complex.is_void():
        raise VoidComplex("polarization of the void complex")
    return mixed_wreath(wc.complex, [w - 1 for w in wc.weights])


def blown_up_nonfaces(wc: WeightedComplex) -> list[tuple[int, ...]]:
    """Minimal non-faces of the polarization predicted from those of the base complex."""
    vmap = WreathVertexMap(wc.weights)
    out = []
    for face in wc.complex.minimal_nonfaces():
        out.append(tuple(sorted(k for i in face for k in vmap.copy_ids(i))))
    return sorted(out, key=lambda f: (len(f), f))
