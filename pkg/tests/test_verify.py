import json
import random
import sys

import pytest

from wsckit.complex import from_facets
from wsckit.monomial import MonomialIdeal
from wsckit.verify import (
    SUITE_NAMES,
    Bounds,
    check_hilbert_relation,
    check_suspension_commutativity,
    random_complex,
    random_ideal,
    trial_rng,
    verify,
)
from wsckit.weighted import WeightedComplex


def test_same_seed_same_bytes():
    a = verify(trials=5, seed=7).dumps()
    b = verify(trials=5, seed=7).dumps()
    assert a == b
    assert json.loads(a)["ok"] is True


def test_different_seeds_draw_different_instances():
    assert random_ideal(trial_rng(1, "x", 0)) != random_ideal(trial_rng(2, "x", 0)) or random_ideal(
        trial_rng(1, "x", 1)
    ) != random_ideal(trial_rng(2, "x", 1))


def test_generators_respect_bounds():
    b = Bounds(max_n=4, max_exponent=2, max_gens=3)
    rng = random.Random(0)
    for _ in range(200):
        ideal = random_ideal(rng, b)
        assert ideal.n <= 4 and 1 <= len(ideal.gens) <= 3  # minimalization may merge gens
        assert all(e <= 2 for g in ideal.gens for e in g)
        assert not ideal.is_unit()
        c = random_complex(rng, b)
        assert c.n <= 4 and c.vertex_mask == (1 << c.n) - 1


def test_suite_selection_and_unknown_names():
    rep = verify(trials=2, seed=0, suites=("hilbert_relation",))
    assert [s.name for s in rep.suites] == ["hilbert_relation"]
    with pytest.raises(ValueError):
        verify(trials=1, suites=("no_such_suite",))
    assert len(SUITE_NAMES) == 12


def test_failures_carry_reproduction_seeds(monkeypatch):
    # the package re-exports the function verify, which shadows the submodule name
    v = sys.modules["wsckit.verify"]

    broken = v.Suite("ass_weighted", v._ideal_and_weights, lambda ideal, w: "forced")
    monkeypatch.setattr(v, "SUITES", (broken,))
    rep = v.verify(trials=2, seed=3)
    assert not rep.ok
    fail = rep.suites[0].failures[1]
    assert fail["seed"] == "3:ass_weighted:1" and fail["detail"] == "forced"
    args, instance = v._ideal_and_weights(trial_rng(3, "ass_weighted", 1), Bounds())
    assert fail["instance"] == instance


def test_individual_checks_on_fixed_inputs():
    wc = WeightedComplex(from_facets(2, [[0], [1]]), (4, 1))
    assert check_hilbert_relation(wc) is None
    c = from_facets(3, [[0, 1], [1, 2]])
    assert check_suspension_commutativity(c, [0, 2, 0]) is None
