"""Shared fixtures, hypothesis strategies and the Euler-Poincare guard.

Every call to ``reduced_homology_dims`` made while the suite runs is checked
against the reduced Euler characteristic computed from the f-vector.
"""

from __future__ import annotations

import sys
from itertools import combinations

import pytest
from hypothesis import strategies as st

import wsckit.checkers
import wsckit.homology
import wsckit.verify
from wsckit.complex import SimplicialComplex
from wsckit.monomial import MonomialIdeal


class EulerLedger:
    def __init__(self):
        self.calls = 0
        self.failures: list[str] = []


EULER = EulerLedger()
_original_homology = wsckit.homology.reduced_homology_dims


def _checked_homology(c, char=0, method="auto"):
    h = _original_homology(c, char, method)
    EULER.calls += 1
    lhs = sum((-1) ** (i - 1) * x for i, x in enumerate(h))
    rhs = -1 + sum((-1) ** i * f for i, f in enumerate(c.f_vector()))
    if lhs != rhs:
        EULER.failures.append(f"{c!r}: homology {h} vs reduced Euler characteristic {rhs}")
    return h


# look modules up by name: the package re-exports a function called ``verify``
for _name in ("wsckit.homology", "wsckit.checkers", "wsckit.verify"):
    sys.modules[_name].reduced_homology_dims = _checked_homology


@pytest.fixture(autouse=True)
def _euler_guard():
    before = len(EULER.failures)
    yield
    new = EULER.failures[before:]
    assert not new, "Euler-Poincare identity violated: " + "; ".join(new[:3])


@pytest.fixture
def euler_ledger():
    return EULER


# -- brute-force helpers used as oracles -------------------------------------


def all_subsets(vertices):
    vertices = list(vertices)
    for r in range(len(vertices) + 1):
        yield from (frozenset(s) for s in combinations(vertices, r))


def brute_faces(c: SimplicialComplex) -> set[frozenset[int]]:
    return {s for s in all_subsets(range(c.n)) if any(s <= set(f) for f in c.facets)}


# -- hypothesis strategies ---------------------------------------------------


@st.composite
def complexes(draw, max_n: int = 5, max_facets: int = 5, full_vertex_set: bool = False):
    n = draw(st.integers(1, max_n))
    facets = draw(
        st.lists(st.sets(st.integers(0, n - 1), max_size=n), min_size=1, max_size=max_facets)
    )
    facets = [sorted(f) for f in facets]
    if full_vertex_set:
        covered = {v for f in facets for v in f}
        facets += [[v] for v in range(n) if v not in covered]
    return SimplicialComplex.from_facets(n, facets)


@st.composite
def ideals(draw, max_n: int = 4, max_exp: int = 3, max_gens: int = 4, proper: bool = True):
    n = draw(st.integers(1, max_n))
    gens = draw(
        st.lists(st.lists(st.integers(0, max_exp), min_size=n, max_size=n), min_size=1, max_size=max_gens)
    )
    ideal = MonomialIdeal(n, gens)
    if proper and ideal.is_unit():
        # drop the constant to keep the ideal proper
        ideal = MonomialIdeal(n, [g for g in gens if any(g)] or [[1] + [0] * (n - 1)])
    return ideal


def weights_for(n: int, max_w: int = 3):
    return st.lists(st.integers(1, max_w), min_size=n, max_size=n).map(tuple)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
