from functools import lru_cache
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_faces, complexes
from wsckit.checkers import (
    implication_chain_violations,
    is_cohen_macaulay_all_faces,
    is_cohen_macaulay_reisner,
    is_constructible_bounded,
    is_shellable,
    is_shelling_order,
    is_vertex_decomposable,
    property_transport_report,
    replay_vertex_decomposition,
    shelling_order,
    vertex_decomposition,
)
from wsckit.complex import boundary_simplex, from_facets, full_simplex, irrelevant_complex
from wsckit.errors import ResourceLimit
from wsckit.wreath import mixed_wreath

OCTAHEDRON = from_facets(6, [[a, b, c] for a in (0, 3) for b in (1, 4) for c in (2, 5)])
RP2 = from_facets(
    6,
    [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]],
)
TWO_EDGES = from_facets(4, [[0, 1], [2, 3]])
BOWTIE = from_facets(5, [[0, 1, 2], [2, 3, 4]])


def vd_oracle(faces: frozenset) -> bool:
    """The recursive definition on explicit face sets, without pruning or memo keys."""

    @lru_cache(maxsize=None)
    def vd(fs: frozenset) -> bool:
        facets = [f for f in fs if not any(f < g for g in fs)]
        if len(facets) == 1:
            return True
        for v in set().union(*fs):
            link = frozenset(g for g in fs if v not in g and g | {v} in fs)
            dele = frozenset(g for g in fs if v not in g)
            dele_facets = [f for f in dele if not any(f < g for g in dele)]
            if any(f in link for f in dele_facets):
                continue
            if vd(link) and vd(dele):
                return True
        return False

    return vd(faces)


def shellable_oracle(c) -> bool:
    return any(is_shelling_order(p) for p in permutations(c.facets))


def test_known_complexes():
    for c in (OCTAHEDRON, boundary_simplex(2), full_simplex(3)):
        assert is_vertex_decomposable(c) and is_shellable(c)
        assert is_constructible_bounded(c) is True and is_cohen_macaulay_reisner(c)
    for c in (TWO_EDGES, BOWTIE):
        assert not is_vertex_decomposable(c) and not is_shellable(c)
        assert is_constructible_bounded(c) is False and not is_cohen_macaulay_reisner(c)


def test_points_are_everything():
    pts = from_facets(3, [[0], [1], [2]])
    assert is_vertex_decomposable(pts) and is_shellable(pts) and is_cohen_macaulay_reisner(pts)


def test_irrelevant_complex_is_a_simplex():
    e = irrelevant_complex(2)
    assert is_vertex_decomposable(e) and is_shellable(e)


def test_projective_plane_cm_depends_on_field():
    assert is_cohen_macaulay_reisner(RP2, 0)
    assert not is_cohen_macaulay_reisner(RP2, 2)
    assert not is_shellable(RP2)
    assert implication_chain_violations(RP2) == []


def test_nonpure_shellable_complex():
    # the edge must come first: the point then meets it in the empty face
    c = from_facets(3, [[0, 1], [2]])
    assert shelling_order(c) == [(0, 1), (2,)]
    assert not is_shelling_order([(2,), (0, 1)])
    d = from_facets(3, [[0, 1], [1, 2], [0]])
    assert d.facets == ((0, 1), (1, 2))
    e = from_facets(4, [[0, 1, 2], [2, 3]])
    assert is_shellable(e) and is_vertex_decomposable(e)
    assert is_constructible_bounded(e) is False  # non-pure


def test_bounds_raise_or_return_unknown():
    w, _ = mixed_wreath(from_facets(3, [[0], [1], [2]]), [2, 2, 2])
    with pytest.raises(ResourceLimit):
        shelling_order(w, bound=12)
    assert is_constructible_bounded(w, bound=8) is None


def test_certificates_replay():
    order = vertex_decomposition(OCTAHEDRON)
    assert replay_vertex_decomposition(OCTAHEDRON, order)
    assert not replay_vertex_decomposition(OCTAHEDRON, [])
    assert is_shelling_order(shelling_order(OCTAHEDRON))
    assert not is_shelling_order([(0, 1), (2, 3)])


@settings(max_examples=100, deadline=None)
@given(complexes(max_n=5, max_facets=5))
def test_vertex_decomposability_matches_oracle(c):
    order = vertex_decomposition(c)
    assert (order is not None) == vd_oracle(frozenset(brute_faces(c)))
    if order is not None:
        assert replay_vertex_decomposition(c, order)


@settings(max_examples=100, deadline=None)
@given(complexes(max_n=5, max_facets=5))
def test_shellability_matches_permutation_search(c):
    order = shelling_order(c)
    assert (order is not None) == shellable_oracle(c)
    if order is not None:
        assert sorted(order) == sorted(c.facets)
        assert is_shelling_order(order)


@settings(max_examples=80, deadline=None)
@given(complexes(max_n=6, max_facets=6), st.sampled_from([0, 2]))
def test_reisner_recursion_matches_all_faces(c, p):
    assert is_cohen_macaulay_reisner(c, p) == is_cohen_macaulay_all_faces(c, p)


@settings(max_examples=100, deadline=None)
@given(complexes(max_n=5, max_facets=6))
def test_implication_chain(c):
    assert implication_chain_violations(c) == []


@settings(max_examples=40, deadline=None)
@given(complexes(max_n=4, max_facets=4, full_vertex_set=True), st.data())
def test_transport_has_no_violations(c, data):
    d = data.draw(st.lists(st.integers(0, 1), min_size=c.n, max_size=c.n))
    rep = property_transport_report(c, d)
    assert rep.ok, rep.to_json()
