"""Acceptance gate: nine criteria, one PASS/FAIL line each.

The lines are printed at the end of every pytest run (see ``conftest.py``)
and also when this file is executed directly with ``python3``.
"""

from __future__ import annotations

import functools
import random
from itertools import combinations

import pytest

from conftest import EULER, brute_faces
from wsckit.checkers import implication_chain_violations, property_transport_report
from wsckit.complex import boundary_simplex, from_facets, full_simplex
from wsckit.decomposition import PrimeIdeal, associated_primes, normally_torsion_free_upto, primary_decomposition, symbolic_power
from wsckit.homology import reduced_homology_dims
from wsckit.monomial import MonomialIdeal, cycle_graph, edge_ideal, power
from wsckit.verify import Bounds, random_complex, trial_rng, verify
from wsckit.weighted import WeightedComplex, polarize, sr_ideal, sr_ideal_weighted
from wsckit.wreath import mixed_wreath, one_point_suspension, wreath_f_formula

RESULTS: dict[int, tuple[str, str]] = {}

OCTAHEDRON = from_facets(6, [[a, b, c] for a in (0, 3) for b in (1, 4) for c in (2, 5)])
TWO_POINTS = from_facets(2, [[0], [1]])


def criterion(number: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                RESULTS[number] = ("FAIL", title)
                raise
            RESULTS[number] = ("PASS", title)

        return run

    return wrap


def report_lines() -> list[str]:
    return [f"criterion {k}: {RESULTS[k][0]}  {RESULTS[k][1]}" for k in sorted(RESULTS)]


def pure(n, *pairs):
    """``pure(3, (0, 2), (1, 3))`` is the ideal (x1^2, x2^3)."""
    gens = []
    for i, e in pairs:
        v = [0] * n
        v[i] = e
        gens.append(v)
    return MonomialIdeal(n, gens)


@criterion(1, "one-point suspension of two points at v1")
def test_criterion_1_suspension_of_two_points():
    s, vmap = one_point_suspension(TWO_POINTS, 0)
    # ids: v11 = 0, v12 = 1, v2 = 2
    assert vmap.labels(["v1", "v2"]) == ["v1_1", "v1_2", "v2_1"]
    assert set(s.facets) == {(0, 1), (0, 2), (1, 2)}
    assert len(s.facets) == 3


@criterion(2, "weighted Stanley-Reisner ideal of {ab, ac, bc, d} with w = (3,4,5,2)")
def test_criterion_2_weighted_sr_ideal():
    wc = WeightedComplex(from_facets(4, [[0, 1], [0, 2], [1, 2], [3]]), (3, 4, 5, 2))
    expected = MonomialIdeal(4, [[3, 4, 5, 0], [3, 0, 0, 2], [0, 4, 0, 2], [0, 0, 5, 2]])
    ideal = sr_ideal_weighted(wc)
    assert ideal == expected
    assert len(ideal.gens) == 4


@criterion(3, "polarizations: full triangle (1,2,3) and two points (4,1)")
def test_criterion_3_polarizations():
    pol, vmap = polarize(WeightedComplex(full_simplex(2), (1, 2, 3)))
    assert pol == full_simplex(5)
    assert pol.facets == ((0, 1, 2, 3, 4, 5),)

    pol, vmap = polarize(WeightedComplex(TWO_POINTS, (4, 1)))
    assert vmap.labels(["a", "b"]) == ["a_1", "a_2", "a_3", "a_4", "b_1"]
    assert pol == boundary_simplex(4)
    assert sr_ideal(pol) == MonomialIdeal(5, [[1, 1, 1, 1, 1]])


@criterion(4, "worked primary decomposition and associated primes")
def test_criterion_4_worked_decomposition():
    ideal = MonomialIdeal(3, [[2, 3, 0], [0, 3, 4], [2, 0, 4]])
    dec = primary_decomposition(ideal)
    expected = {pure(3, (0, 2), (1, 3)), pure(3, (0, 2), (2, 4)), pure(3, (1, 3), (2, 4))}
    assert set(dec.ideals()) == expected and len(dec.components) == 3
    two_var = {PrimeIdeal(3, p) for p in combinations(range(3), 2)}
    assert set(associated_primes(ideal)) == two_var
    assert set(associated_primes(edge_ideal(cycle_graph(3)))) == two_var


@criterion(5, "octahedron mixed wreath with d = (2,1,2,1,3,3): dim 14, f0 18, f_top")
def test_criterion_5_octahedron_wreath():
    d = (2, 1, 2, 1, 3, 3)
    w, vmap = mixed_wreath(OCTAHEDRON, d)
    assert w.dim == 14
    f0, f_top = wreath_f_formula(OCTAHEDRON, d)
    assert f0 == 18
    # brute force: every 15-subset of the 18 vertices, tested against the facets
    # of the constructed complex and against the defining face rule
    facets = [set(f) for f in w.facets]
    base = brute_faces(OCTAHEDRON)
    top_faces = 0
    for s in combinations(range(18), 15):
        s = set(s)
        in_w = any(s <= f for f in facets)
        full = frozenset(i for i in range(6) if set(vmap.copy_ids(i)) <= s)
        assert in_w == (full in base)
        top_faces += in_w
    assert len({v for f in facets for v in f}) == 18
    assert f_top == top_faces == w.f_vector()[-1]


BATTERY = (
    "betti_rescaling",
    "koszul_rescaling",
    "ass_weighted",
    "weighted_decomposition",
    "polarization_ideal",
    "polarization_invariants",
    "hilbert_relation",
    "suspension_commutativity",
)


@criterion(6, "theorem battery (a)-(h), 50 seeded trials each, zero failures")
def test_criterion_6_theorem_battery():
    bounds = Bounds(max_n=5, max_exponent=3, max_weight=3)
    report = verify(trials=50, seed=42, bounds=bounds, suites=BATTERY)
    assert [s.name for s in report.suites] == list(BATTERY)
    for s in report.suites:
        assert s.trials == 50
        assert s.failures == [], (s.name, s.failures[:1])
        assert s.skipped == 0, s.name
    assert report.ok


@criterion(7, "homology sanity and the Euler-Poincare identity on every call")
def test_criterion_7_homology():
    before = EULER.calls
    # lists start at degree -1
    assert reduced_homology_dims(boundary_simplex(2)) == [0, 0, 1]
    h = reduced_homology_dims(OCTAHEDRON)
    assert h[3] == 1 and sum(h) == 1
    rep = verify(trials=50, seed=42, suites=("euler_poincare",))
    assert rep.ok
    assert EULER.calls > before + 50
    assert EULER.failures == []


@criterion(8, "normal torsion freeness probe on C4 and C3, weighted and unweighted")
def test_criterion_8_ntf():
    c4, c3 = edge_ideal(cycle_graph(4)), edge_ideal(cycle_graph(3))
    v4 = normally_torsion_free_upto(c4, 3)
    assert v4.holds
    v3 = normally_torsion_free_upto(c3, 3)
    assert v3.first_failure == 2
    assert v3.new_primes[2] == {PrimeIdeal(3, (0, 1, 2))}
    assert symbolic_power(c3, 2).contains((1, 1, 1))
    assert not power(c3, 2).contains((1, 1, 1))
    rng = random.Random("acceptance:ntf")
    for _ in range(5):
        w4 = tuple(rng.randint(1, 3) for _ in range(4))
        w3 = tuple(rng.randint(1, 3) for _ in range(3))
        assert normally_torsion_free_upto(edge_ideal(cycle_graph(4), w4), 3).holds
        weighted3 = normally_torsion_free_upto(edge_ideal(cycle_graph(3), w3), 3)
        assert weighted3.first_failure == 2
        assert weighted3.new_primes[2] == v3.new_primes[2]


@criterion(9, "checker implication chain and 25 seeded property transport pairs")
def test_criterion_9_checkers(capsys):
    touched = [OCTAHEDRON, boundary_simplex(2), full_simplex(3), TWO_POINTS]
    touched += [random_complex(trial_rng(42, "acceptance_chain", t)) for t in range(50)]
    undecided = 0
    for t in range(25):
        rng = trial_rng(42, "acceptance_transport", t)
        c = random_complex(rng, Bounds(max_n=5))
        d = [rng.randint(0, 2) for _ in range(c.n)]
        rep = property_transport_report(c, d)
        assert rep.violations == [], (c, d, rep.to_json())
        undecided += len(rep.undecided)
        w, _ = mixed_wreath(c, d)
        touched += [c] + ([w] if len(w.facets) <= 12 else [])
    for c in touched:
        assert len(c.facets) <= 12
        assert implication_chain_violations(c) == [], c
    with capsys.disabled():
        print(f"\n  transport: 25 pairs, 0 violations, {undecided} undecided property comparisons")


if __name__ == "__main__":
    import subprocess
    import sys

    sys.exit(subprocess.call([sys.executable, "-m", "pytest", __file__, "-q"]))
