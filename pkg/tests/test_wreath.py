import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_subsets, brute_faces, complexes
from wsckit.complex import boundary_simplex, from_facets, full_simplex
from wsckit.errors import ArityMismatch, InvalidDimension, NotAVertex, ResourceLimit
from wsckit.verify import suspend_sequence
from wsckit.wreath import (
    WreathVertexMap,
    mixed_wreath,
    one_point_suspension,
    reduced_join,
    wreath_f_formula,
)


def wreath_oracle(c, d):
    """Faces: copy sets whose fully-present original vertices form a face of ``c``."""
    vmap = WreathVertexMap(tuple(x + 1 for x in d))
    base = brute_faces(c)
    out = set()
    for s in all_subsets(range(vmap.total)):
        full = frozenset(i for i in range(c.n) if set(vmap.copy_ids(i)) <= s)
        if full in base:
            out.add(s)
    return out


def test_one_point_suspension_of_two_points():
    s, vmap = one_point_suspension(from_facets(2, [[0], [1]]), 0)
    # copies v11, v12 of the first point get ids 0, 1; the second point is 2
    assert s.facets == ((0, 1), (0, 2), (1, 2))
    assert vmap.copies == (2, 1)
    assert vmap.labels(["v1", "v2"]) == ["v1_1", "v1_2", "v2_1"]


def test_reduced_join_is_iterated_suspension():
    c = from_facets(3, [[0, 1], [1, 2]])
    rj, _ = reduced_join(c, 1, 2)
    assert rj == suspend_sequence(c, [1, 1])


def test_zero_dimensions_are_identity():
    c = from_facets(3, [[0, 1], [2]])
    w, vmap = mixed_wreath(c, [0, 0, 0])
    assert w == c and vmap.total == 3


def test_errors():
    c = from_facets(2, [[0, 1]])
    with pytest.raises(ArityMismatch):
        mixed_wreath(c, [1])
    with pytest.raises(InvalidDimension):
        mixed_wreath(c, [1, -1])
    with pytest.raises(InvalidDimension):
        reduced_join(c, 0, 0)
    with pytest.raises(NotAVertex):
        one_point_suspension(from_facets(3, [[0, 1]]), 2)
    with pytest.raises(ResourceLimit):
        mixed_wreath(c, [40, 40])


def test_wreath_of_simplex_is_simplex():
    w, _ = mixed_wreath(full_simplex(2), [0, 1, 2])
    assert w.facets == ((0, 1, 2, 3, 4, 5),)


def test_wreath_of_boundary_is_boundary():
    # copies of a missing vertex contribute all but one copy, so the result is a sphere
    w, _ = mixed_wreath(boundary_simplex(1), [1, 1])
    assert w == boundary_simplex(3)


def test_octahedron_wreath_dimension_and_counts():
    octa = from_facets(6, [[a, b, c] for a in (0, 3) for b in (1, 4) for c in (2, 5)])
    d = (2, 1, 2, 1, 3, 3)
    w, vmap = mixed_wreath(octa, d)
    assert w.dim == 14
    assert vmap.total == 18
    f0, ftop = wreath_f_formula(octa, d)
    assert f0 == 18 == w.f_vector()[0]
    assert ftop == len([f for f in w.facets if len(f) == 15])


@settings(max_examples=60, deadline=None)
@given(complexes(max_n=4, max_facets=4), st.data())
def test_mixed_wreath_matches_oracle(c, data):
    d = data.draw(st.lists(st.integers(0, 2), min_size=c.n, max_size=c.n))
    if sum(d) + c.n > 11:
        d = [min(x, 1) for x in d]
    w, _ = mixed_wreath(c, d)
    assert brute_faces(w) == wreath_oracle(c, d)


@settings(max_examples=80, deadline=None)
@given(complexes(max_n=5, max_facets=4), st.data())
def test_f_formula_matches_enumeration(c, data):
    d = data.draw(st.lists(st.integers(0, 2), min_size=c.n, max_size=c.n))
    w, _ = mixed_wreath(c, d)
    f0, ftop = wreath_f_formula(c, d)
    if w.is_irrelevant():
        assert f0 == 0
        return
    fv = w.f_vector()
    assert f0 == fv[0]
    assert ftop == fv[-1]
    assert w.dim == sum(d) + c.dim


@settings(max_examples=60, deadline=None)
@given(complexes(max_n=4, full_vertex_set=True), st.data())
def test_suspension_order_does_not_matter(c, data):
    order = data.draw(st.lists(st.integers(0, c.n - 1), min_size=1, max_size=3))
    d = [order.count(i) for i in range(c.n)]
    target, _ = mixed_wreath(c, d)
    assert suspend_sequence(c, order) == target
    assert suspend_sequence(c, sorted(order, reverse=True)) == target


def test_vertex_map_bookkeeping():
    vmap = WreathVertexMap((2, 1, 3))
    assert vmap.offsets == (0, 2, 3)
    assert list(vmap.copy_ids(2)) == [3, 4, 5]
    assert vmap.owner(4) == (2, 1)
    assert vmap.copy_mask(0) == 0b11
    with pytest.raises(IndexError):
        vmap.copy_id(1, 1)
