"""Reduced homology, upper-Koszul complexes and Betti tables of monomial ideals.

Multigraded Betti numbers come from the Hochster-type formula
``beta_{i,b}(I) = dim H~_{i-1}(K^b(I); k)`` evaluated on the lcm lattice of
the generators; every other degree gives a cone.  All ranks are exact.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence

from .complex import SimplicialComplex, minimal_transversals, popcount
from .errors import DegenerateIdeal, ResourceLimit, VoidComplex
from .linalg import check_characteristic, rank
from .monomial import MonomialIdeal, divides, lcm

MAX_LATTICE = 2**20


def default_characteristic() -> int:
    return check_characteristic(int(os.environ.get("WSCKIT_CHAR", "0")))


# -- reduced homology -------------------------------------------------------


def _boundary_rows(faces_hi: list[int], index_lo: dict[int, int]):
    for f in faces_hi:
        row = {}
        sign = 1
        rest = f
        while rest:
            bit = rest & -rest
            row[index_lo[f ^ bit]] = sign
            sign = -sign
            rest ^= bit
        yield row


def _homology_from_faces(face_masks, top: int, char: int) -> list[int]:
    """Reduced homology of the augmented chain complex on ``face_masks``.

    ``top`` is the largest face size; the result has ``top + 1`` entries
    (sizes 0..top, i.e. dimensions -1..top-1).
    """
    by_size: list[list[int]] = [[] for _ in range(top + 1)]
    for m in face_masks:
        by_size[popcount(m)].append(m)
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        if not by_size[s] or not by_size[s - 1]:
            continue
        index = {m: i for i, m in enumerate(by_size[s - 1])}
        ranks[s] = rank(_boundary_rows(by_size[s], index), char)
    return [len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1)]


def _is_cone(c: SimplicialComplex) -> bool:
    common = -1
    for m in c.facet_masks:
        common &= m
    return common != 0


def _nerve_faces(facets: Sequence[int]) -> list[int]:
    """Subsets of facet indices whose facets share a vertex (as masks over indices)."""
    out = []
    stack = [(0, -1, 0)]  # (index mask, running intersection, next index)
    k = len(facets)
    while stack:
        sel, inter, start = stack.pop()
        out.append(sel)
        for j in range(start, k):
            nxt = facets[j] if sel == 0 else inter & facets[j]
            if nxt:
                stack.append((sel | 1 << j, nxt, j + 1))
    return out


def _used_nonfaces(c: SimplicialComplex) -> list[int]:
    """Minimal non-faces inside the used vertex set, as masks."""
    used = c.vertex_mask
    return minimal_transversals([used & ~m for m in c.facet_masks])


def reduced_homology_dims(c: SimplicialComplex, char: int = 0, method: str = "auto") -> list[int]:
    """``[dim H~_{-1}, dim H~_0, ..., dim H~_{dim c}]`` over Q (``char=0``) or GF(p).

    ``method`` is ``"faces"`` (full chain complex), ``"nerve"`` (nerve of the
    facet cover; same homology by the nerve lemma), ``"dual"`` (Alexander
    duality inside the used vertex set) or ``"auto"``.
    """
    if c.is_void():
        raise VoidComplex("homology of the void complex")
    length = c.dim + 2
    if c.is_irrelevant():
        return [1]
    nonfaces = None
    if method == "auto":
        if c.is_simplex() or _is_cone(c):
            return [0] * length
        t, m = len(c.facet_masks), popcount(c.vertex_mask)
        if t < m:
            method = "nerve"
        elif len(nonfaces := _used_nonfaces(c)) < t:
            method = "dual"
        else:
            method = "faces"
    if method == "faces":
        return _homology_from_faces(c.face_masks, c.dim + 1, char)
    if method == "nerve":
        nerve = _nerve_faces(list(c.facet_masks))
        top = max(popcount(m) for m in nerve)
        h = _homology_from_faces(nerve, top, char)
        return h[:length] + [0] * (length - len(h))
    if method == "dual":
        used = c.vertex_mask
        m = popcount(used)
        if nonfaces is None:
            nonfaces = _used_nonfaces(c)
        if not nonfaces:
            return [0] * length
        dual = SimplicialComplex.from_masks(c.n, (used & ~f for f in nonfaces))
        if dual.is_irrelevant():
            hd = [1]
        else:
            hd = reduced_homology_dims(dual, char, "nerve" if len(dual.facet_masks) < m else "faces")
        # H~_i(c) = H~_{m-i-3}(dual); list index of degree j is j + 1
        return [hd[m - i - 2] if 0 <= m - i - 2 < len(hd) else 0 for i in range(-1, length - 1)]
    raise ValueError(f"unknown homology method {method!r}")


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    """``-1 + f_0 - f_1 + ...`` from the f-vector."""
    return -1 + sum((-1) ** i * f for i, f in enumerate(c.f_vector()))


# -- upper-Koszul complexes and Betti tables --------------------------------


def upper_koszul(ideal: MonomialIdeal, b: Sequence[int]) -> SimplicialComplex:
    """Faces are the vertex sets ``W`` with ``x^(b - W) in I``.

    ``W`` is a face iff some generator ``g`` divides ``x^b`` with
    ``g_i < b_i`` on ``W``, so the facets are ``{i : b_i > g_i}``.
    """
    b = tuple(b)
    masks = []
    for g in ideal.gens:
        if divides(g, b):
            m = 0
            for i, (gi, bi) in enumerate(zip(g, b)):
                if bi > gi:
                    m |= 1 << i
            masks.append(m)
    return SimplicialComplex.from_masks(ideal.n, masks)


def lcm_lattice(ideal: MonomialIdeal, cap: int = MAX_LATTICE) -> list[tuple[int, ...]]:
    """lcms of all nonempty generator subsets, sorted by degree."""
    lattice: set[tuple[int, ...]] = set()
    for g in ideal.gens:
        new = {g}
        new.update(lcm(g, m) for m in lattice)
        lattice |= new
        if len(lattice) > cap:
            raise ResourceLimit(f"lcm lattice exceeds {cap} points")
    return sorted(lattice, key=lambda b: (sum(b), b))


@dataclass
class BettiTable:
    """Multigraded Betti numbers of an ideal ``I`` (not of ``R/I``)."""

    n: int
    entries: dict[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, b), v in self.entries.items():
            key = (i, sum(b))
            out[key] = out.get(key, 0) + v
        return dict(sorted(out.items()))

    def totals(self) -> list[int]:
        out = [0] * (self.projective_dimension() + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def regularity(self) -> int:
        return max(sum(b) - i for i, b in self.entries)

    def rescaled(self, w: Sequence[int]) -> dict[tuple[int, tuple[int, ...]], int]:
        return {(i, tuple(x * y for x, y in zip(b, w))): v for (i, b), v in self.entries.items()}

    def to_json(self) -> dict:
        rows = [
            {"i": i, "degree": list(b), "value": v}
            for (i, b), v in sorted(self.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))
        ]
        return {"n": self.n, "entries": rows}

    def format(self) -> str:
        """Macaulay-style table: columns are homological degrees, rows ``j - i``."""
        graded = self.graded()
        if not graded:
            return "(empty)"
        pd = self.projective_dimension()
        shifts = sorted({j - i for i, j in graded})
        width = max(len(str(v)) for v in graded.values()) + 1
        width = max(width, len(str(pd)) + 1)
        lines = [f"{'':>6}" + "".join(f"{i:>{width}}" for i in range(pd + 1))]
        lines.append(f"{'total:':>6}" + "".join(f"{t:>{width}}" for t in self.totals()))
        for s in shifts:
            cells = [graded.get((i, i + s), 0) for i in range(pd + 1)]
            lines.append(f"{str(s) + ':':>6}" + "".join(f"{(c if c else '.'):>{width}}" for c in cells))
        return "\n".join(lines)


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero():
        raise DegenerateIdeal("the zero ideal has no Betti table")
    if ideal.is_unit():
        raise DegenerateIdeal("the unit ideal has no Betti table")


def multigraded_betti(ideal: MonomialIdeal, char: int | None = None) -> BettiTable:
    char = default_characteristic() if char is None else check_characteristic(char)
    _require_proper_nonzero(ideal)
    table = BettiTable(ideal.n)
    for b in lcm_lattice(ideal):
        k = upper_koszul(ideal, b)
        if k.is_void():
            continue
        for i, h in enumerate(reduced_homology_dims(k, char)):
            if h:
                table.entries[(i, b)] = h
    return table


def graded_betti(ideal: MonomialIdeal, char: int | None = None) -> dict[tuple[int, int], int]:
    return multigraded_betti(ideal, char).graded()


def projective_dimension(ideal: MonomialIdeal, char: int | None = None) -> int:
    """``pd(I)``; note ``pd(R/I) = pd(I) + 1``."""
    return multigraded_betti(ideal, char).projective_dimension()


def regularity(ideal: MonomialIdeal, char: int | None = None) -> int:
    """``reg(I) = max(j - i)``; ``reg(R/I) = reg(I) - 1``."""
    return multigraded_betti(ideal, char).regularity()


def depth(ideal: MonomialIdeal, char: int | None = None) -> int:
    """``depth(R/I) = n - pd(R/I)`` (Auslander-Buchsbaum)."""
    if ideal.is_zero():
        return ideal.n
    return ideal.n - (projective_dimension(ideal, char) + 1)


def krull_dimension(ideal: MonomialIdeal) -> int:
    """``dim(R/I) = n - height(I)``."""
    from .decomposition import height

    if ideal.is_zero():
        return ideal.n
    return ideal.n - height(ideal)


def is_cohen_macaulay_ring(ideal: MonomialIdeal, char: int | None = None) -> bool:
    if ideal.is_unit():
        raise DegenerateIdeal("R/I is the zero ring")
    return depth(ideal, char) == krull_dimension(ideal)


# -- Hilbert series ---------------------------------------------------------


def poly_trim(p: Sequence[int]) -> tuple[int, ...]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def one_minus_t_power(k: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(k):
        out = poly_mul(out, (1, -1))
    return out


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t)^nvars`` for ``R/I``."""

    numerator: tuple[int, ...]
    nvars: int

    def equals(self, other: "HilbertSeries") -> bool:
        """Equality as rational functions (cross-multiplied)."""
        lhs = poly_mul(self.numerator, one_minus_t_power(other.nvars))
        rhs = poly_mul(other.numerator, one_minus_t_power(self.nvars))
        return lhs == rhs

    def times_one_minus_t(self, k: int) -> "HilbertSeries":
        return HilbertSeries(poly_mul(self.numerator, one_minus_t_power(k)), self.nvars)

    def format(self) -> str:
        terms = []
        for d, c in enumerate(self.numerator):
            if c:
                terms.append(f"{c:+d}" + ("" if d == 0 else "*t" if d == 1 else f"*t^{d}"))
        num = " ".join(terms).lstrip("+") or "0"
        return f"({num}) / (1-t)^{self.nvars}"

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator), "nvars": self.nvars}


def hilbert_series(ideal: MonomialIdeal, char: int | None = None) -> HilbertSeries:
    """Hilbert series of ``R/I`` with numerator ``1 - sum_i (-1)^i sum_b beta_{i,b}(I) t^|b|``."""
    if ideal.is_zero():
        return HilbertSeries((1,), ideal.n)
    if ideal.is_unit():
        return HilbertSeries((), ideal.n)
    table = multigraded_betti(ideal, char)
    top = max(sum(b) for _, b in table.entries)
    coeffs = [0] * (top + 1)
    coeffs[0] = 1
    for (i, b), v in table.entries.items():
        coeffs[sum(b)] -= (-1) ** i * v
    return HilbertSeries(poly_trim(coeffs), ideal.n)


__all__ = [
    "BettiTable",
    "HilbertSeries",
    "default_characteristic",
    "depth",
    "graded_betti",
    "hilbert_series",
    "is_cohen_macaulay_ring",
    "krull_dimension",
    "lcm_lattice",
    "multigraded_betti",
    "one_minus_t_power",
    "poly_mul",
    "projective_dimension",
    "reduced_euler_characteristic",
    "reduced_homology_dims",
    "regularity",
    "upper_koszul",
]
