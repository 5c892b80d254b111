"""Finite abstract simplicial complexes stored by their facets.

Vertices are dense integer ids ``0 .. n-1``.  Faces are sorted tuples of ids;
internally every face is also a bitmask so the ambient vertex count is capped
at :data:`MAX_VERTICES`.

The *void* complex has no faces at all, the *irrelevant* complex has the empty
face only.  They are different objects: the irrelevant complex has
``H~_{-1} = k``, the void complex has no homology.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidDimension, InvalidVertex, NotAVertex, ResourceLimit, VoidComplex

MAX_VERTICES = 63

Face = tuple


def mask_of(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def face_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal elements of a family of sets (duplicates removed)."""
    uniq = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in uniq:
        for k in kept:
            if m & k == m:
                break
        else:
            kept.append(m)
    return kept


def minimal_transversals(sets: Iterable[int]) -> list[int]:
    """Minimal masks meeting every mask in ``sets`` (Berge's incremental method)."""
    trans = [0]
    for s in sets:
        nxt = set()
        for t in trans:
            if t & s:
                nxt.add(t)
                continue
            v = s
            while v:
                bit = v & -v
                nxt.add(t | bit)
                v ^= bit
        kept: list[int] = []
        for m in sorted(nxt, key=popcount):
            if not any(k & m == k for k in kept):
                kept.append(m)
        trans = kept
    return trans


class SimplicialComplex:
    """Immutable simplicial complex on the ambient vertex set ``range(n)``.

    Build instances with :meth:`from_facets` (or the module helpers); the
    constructor trusts its input to already be a canonical antichain.
    """

    __slots__ = ("n", "_masks", "__dict__")

    def __init__(self, n: int, facet_masks: Iterable[int]):
        self.n = n
        self._masks = tuple(sorted(facet_masks))

    @cached_property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        """Facets as sorted vertex tuples, in lexicographic order."""
        return tuple(sorted(face_of(m) for m in self._masks))

    @classmethod
    def from_facets(cls, n: int, raw_faces: Iterable[Sequence[int]]) -> "SimplicialComplex":
        if n < 0:
            raise InvalidVertex(f"negative vertex count {n}")
        if n > MAX_VERTICES:
            raise ResourceLimit(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
        masks = []
        for face in raw_faces:
            for v in face:
                if not isinstance(v, int) or isinstance(v, bool) or v < 0 or v >= n:
                    raise InvalidVertex(f"vertex {v!r} out of range for n={n}")
            masks.append(mask_of(face))
        return cls(n, maximal_masks(masks))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(n, maximal_masks(masks))

    # -- basic structure -------------------------------------------------

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._masks

    def is_void(self) -> bool:
        return not self._masks

    def is_irrelevant(self) -> bool:
        return self._masks == (0,)

    def is_simplex(self) -> bool:
        """True for a single facet (the irrelevant complex counts as the empty simplex)."""
        return len(self._masks) == 1

    @property
    def dim(self) -> int:
        if not self._masks:
            raise VoidComplex("the void complex has no dimension")
        return max(popcount(m) for m in self._masks) - 1

    def is_pure(self) -> bool:
        return len({popcount(m) for m in self._masks}) <= 1

    @cached_property
    def vertex_mask(self) -> int:
        out = 0
        for m in self._masks:
            out |= m
        return out

    @property
    def vertices(self) -> tuple[int, ...]:
        return face_of(self.vertex_mask)

    def has_face(self, face: Iterable[int] | int) -> bool:
        m = face if isinstance(face, int) else mask_of(face)
        return any(m & f == m for f in self._masks)

    def __contains__(self, face) -> bool:
        return self.has_face(face)

    @cached_property
    def face_masks(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self._masks:
            out.update(submasks(f))
        return frozenset(out)

    def faces(self) -> list[tuple[int, ...]]:
        return sorted((face_of(m) for m in self.face_masks), key=lambda f: (len(f), f))

    def f_vector(self) -> tuple[int, ...]:
        if self.is_void():
            raise VoidComplex("f-vector of the void complex")
        counts = [0] * (self.dim + 2)
        for m in self.face_masks:
            counts[popcount(m)] += 1
        return tuple(counts[1:])

    # -- derived complexes -----------------------------------------------

    def minimal_nonfaces(self) -> list[tuple[int, ...]]:
        """Minimal sets outside the complex, ghost vertices included as singletons.

        A set is a non-face iff it meets the complement of every facet, so these
        are the minimal transversals of the facet complements.
        """
        if self.is_void():
            raise VoidComplex("minimal non-faces of the void complex")
        full = (1 << self.n) - 1
        found = minimal_transversals([full & ~m for m in self._masks])
        return sorted((face_of(m) for m in found), key=lambda f: (len(f), f))

    def _require_vertex(self, v: int) -> None:
        if not (0 <= v < self.n) or not self.has_face(1 << v):
            raise NotAVertex(f"{v} is not a vertex of the complex")

    def link(self, v: int) -> "SimplicialComplex":
        self._require_vertex(v)
        return self.link_of_face((v,))

    def link_of_face(self, face: Iterable[int] | int) -> "SimplicialComplex":
        """``{G : G & F = 0, G | F in complex}``; void when ``F`` is not a face."""
        fm = face if isinstance(face, int) else mask_of(face)
        return SimplicialComplex(self.n, maximal_masks(m & ~fm for m in self._masks if m & fm == fm))

    def star(self, v: int) -> "SimplicialComplex":
        self._require_vertex(v)
        bit = 1 << v
        return SimplicialComplex(self.n, [m for m in self._masks if m & bit])

    def deletion(self, face: Iterable[int] | int) -> "SimplicialComplex":
        """All faces not containing ``face``; deleting a non-face changes nothing."""
        fm = face if isinstance(face, int) else mask_of(face)
        out = []
        for m in self._masks:
            if m & fm != fm:
                out.append(m)
            else:
                out.extend(m & ~(1 << u) for u in face_of(fm))
        return SimplicialComplex.from_masks(self.n, out)

    def delete_vertex(self, v: int) -> "SimplicialComplex":
        return self.deletion(1 << v)

    def restriction(self, vertex_set: Iterable[int] | int) -> "SimplicialComplex":
        vm = vertex_set if isinstance(vertex_set, int) else mask_of(vertex_set)
        if not self._masks:
            return self
        return SimplicialComplex.from_masks(self.n, (m & vm for m in self._masks))

    def relabel(self, mapping: Sequence[int], n: int) -> "SimplicialComplex":
        """Apply the vertex map ``v -> mapping[v]`` into an ambient set of size ``n``."""
        return SimplicialComplex.from_facets(n, ([mapping[v] for v in f] for f in self.facets))

    def compressed(self) -> "SimplicialComplex":
        """Order-preserving relabelling of the used vertices onto ``0..k-1``."""
        verts = self.vertices
        index = {v: i for i, v in enumerate(verts)}
        return SimplicialComplex.from_facets(len(verts), ([index[v] for v in f] for f in self.facets))

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={[list(f) for f in self.facets]})"

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}


from_facets = SimplicialComplex.from_facets


def void_complex(n: int = 0) -> SimplicialComplex:
    return SimplicialComplex(n, [])


def irrelevant_complex(n: int = 0) -> SimplicialComplex:
    return SimplicialComplex(n, [0])


def full_simplex(d: int) -> SimplicialComplex:
    if d < 0:
        raise InvalidDimension(f"simplex dimension {d} < 0")
    return SimplicialComplex(d + 1, [(1 << (d + 1)) - 1])


def boundary_simplex(d: int) -> SimplicialComplex:
    if d < 0:
        raise InvalidDimension(f"simplex dimension {d} < 0")
    top = (1 << (d + 1)) - 1
    if d == 0:
        return SimplicialComplex(1, [0])
    return SimplicialComplex(d + 1, [top & ~(1 << v) for v in range(d + 1)])


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join with ``b``'s vertices shifted up by ``a.n``."""
    n = a.n + b.n
    if n > MAX_VERTICES:
        raise ResourceLimit(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
    return SimplicialComplex(n, [fa | (fb << a.n) for fa in a.facet_masks for fb in b.facet_masks])


def cone(c: SimplicialComplex) -> SimplicialComplex:
    """Cone with the new apex as vertex ``c.n``."""
    return join(c, full_simplex(0))


def from_minimal_nonfaces(n: int, nonfaces: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Complex of all subsets of ``range(n)`` containing no listed non-face."""
    bad = [mask_of(f) for f in nonfaces]
    if n > 20:
        raise ResourceLimit("reconstruction from non-faces enumerates 2^n subsets")
    faces = [m for m in range(1 << n) if not any(b & m == b for b in bad)]
    return SimplicialComplex.from_masks(n, faces)
