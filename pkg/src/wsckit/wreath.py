"""One-point suspensions, reduced joins and mixed wreath products.

Every constructor returns the new complex together with a
:class:`WreathVertexMap` recording which new vertex is which copy of which
original vertex.  Copies of vertex ``i`` are numbered ``0 .. d_i`` and occupy
consecutive ids, so a vertex with ``d_i = 0`` keeps a single copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Sequence

from .complex import MAX_VERTICES, SimplicialComplex, popcount
from .errors import ArityMismatch, InvalidDimension, NotAVertex, ResourceLimit


@dataclass(frozen=True)
class WreathVertexMap:
    """Copy bookkeeping: vertex ``i`` owns ids ``offset(i) .. offset(i) + copies[i] - 1``.

    ``copies[i]`` may be 0 only when the map describes a polarization ring in
    which variable ``i`` does not occur.
    """

    copies: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.copies):
            raise InvalidDimension(f"negative copy count in {self.copies}")

    @property
    def original_n(self) -> int:
        return len(self.copies)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for c in self.copies:
            out.append(acc)
            acc += c
        return tuple(out)

    @property
    def total(self) -> int:
        return sum(self.copies)

    def copy_id(self, i: int, j: int) -> int:
        if not 0 <= j < self.copies[i]:
            raise IndexError(f"vertex {i} has {self.copies[i]} copies, asked for copy {j}")
        return self.offsets[i] + j

    def copy_ids(self, i: int) -> range:
        return range(self.offsets[i], self.offsets[i] + self.copies[i])

    def copy_mask(self, i: int) -> int:
        return ((1 << self.copies[i]) - 1) << self.offsets[i]

    def owner(self, new_id: int) -> tuple[int, int]:
        for i, (off, c) in enumerate(zip(self.offsets, self.copies)):
            if off <= new_id < off + c:
                return i, new_id - off
        raise IndexError(new_id)

    def labels(self, names: Sequence[str] | None = None) -> list[str]:
        """Human names ``name_j`` with ``j`` counted from 1, as in ``x_{i,j}``."""
        names = names or [f"x{i + 1}" for i in range(self.original_n)]
        return [f"{names[i]}_{j + 1}" for i in range(self.original_n) for j in range(self.copies[i])]

    def to_json(self) -> dict:
        return {"copies": list(self.copies), "offsets": list(self.offsets)}


def _check_vertex(c: SimplicialComplex, v: int) -> None:
    if not (0 <= v < c.n) or not c.has_face(1 << v):
        raise NotAVertex(f"{v} is not a vertex of the complex")


def mixed_wreath(c: SimplicialComplex, d: Sequence[int]) -> tuple[SimplicialComplex, WreathVertexMap]:
    """Replace each vertex ``v_i`` by ``d_i + 1`` copies.

    Each facet ``F`` contributes every set made of all copies of its own
    vertices plus, for each vertex outside ``F``, all copies but one.
    """
    d = tuple(int(x) for x in d)
    if len(d) != c.n:
        raise ArityMismatch(f"{len(d)} wreath dimensions for {c.n} vertices")
    if any(x < 0 for x in d):
        raise InvalidDimension(f"negative wreath dimension in {d}")
    vmap = WreathVertexMap(tuple(x + 1 for x in d))
    if vmap.total > MAX_VERTICES:
        raise ResourceLimit(f"mixed wreath product needs {vmap.total} vertices")
    full = [vmap.copy_mask(i) for i in range(c.n)]
    out = []
    for fm in c.facet_masks:
        inside = 0
        choices = []
        for i in range(c.n):
            if fm >> i & 1:
                inside |= full[i]
            else:
                choices.append([full[i] & ~(1 << k) for k in vmap.copy_ids(i)])
        for pick in product(*choices):
            m = inside
            for part in pick:
                m |= part
            out.append(m)
    return SimplicialComplex(vmap.total, sorted(set(out))), vmap


def reduced_join(c: SimplicialComplex, v: int, d: int) -> tuple[SimplicialComplex, WreathVertexMap]:
    """Reduced join with the boundary of a ``d``-simplex at ``v`` (``d >= 1``)."""
    if d < 1:
        raise InvalidDimension(f"reduced join needs d >= 1, got {d}")
    _check_vertex(c, v)
    dims = [0] * c.n
    dims[v] = d
    return mixed_wreath(c, dims)


def one_point_suspension(c: SimplicialComplex, v: int) -> tuple[SimplicialComplex, WreathVertexMap]:
    """Split ``v`` into two copies ``v_1, v_2`` (ids ``v`` and ``v + 1``)."""
    return reduced_join(c, v, 1)


def wreath_f_formula(c: SimplicialComplex, d: Sequence[int]) -> tuple[int, int]:
    """Closed-form ``(f_0, f_top)`` of ``mixed_wreath(c, d)``.

    ``f_0 = sum(d) + n`` when every ambient vertex is used.  A ghost vertex
    contributes its ``d_j + 1`` copies only when ``d_j >= 1`` (every facet
    then holds all but one of them).  ``f_top`` sums, over the
    top-dimensional facets, the product of ``d_j + 1`` over the vertices
    ``j`` missing from the facet.
    """
    if len(d) != c.n:
        raise ArityMismatch(f"{len(d)} wreath dimensions for {c.n} vertices")
    used = c.vertex_mask
    f0 = sum(d[j] + 1 for j in range(c.n) if used >> j & 1 or d[j] >= 1)
    top = c.dim + 1
    f_top = sum(
        prod(d[j] + 1 for j in range(c.n) if not fm >> j & 1)
        for fm in c.facet_masks
        if popcount(fm) == top
    )
    return f0, f_top
