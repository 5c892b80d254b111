"""Seeded property battery replaying the structural theorems on random instances.

Each suite draws its instances from ``random.Random(f"{seed}:{suite}:{trial}")``
so any failing trial can be replayed on its own, and the report for a given
seed and bounds is byte-identical across runs.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .checkers import implication_chain_violations, property_transport_report
from .complex import SimplicialComplex
from .decomposition import (
    associated_primes,
    height,
    normally_torsion_free_upto,
    weighted_decomposition_check,
)
from .errors import ResourceLimit
from .homology import (
    hilbert_series,
    multigraded_betti,
    reduced_euler_characteristic,
    reduced_homology_dims,
    upper_koszul,
)
from .monomial import MonomialIdeal, polarize_ideal, weight_ideal
from .weighted import WeightedComplex, polarize, sr_ideal, sr_ideal_weighted
from .wreath import WreathVertexMap, mixed_wreath, one_point_suspension


@dataclass(frozen=True)
class Bounds:
    max_n: int = 5
    max_exponent: int = 3
    max_weight: int = 3
    max_gens: int = 5
    max_wreath_d: int = 2


# -- instance generators ----------------------------------------------------


def random_ideal(rng: random.Random, b: Bounds = Bounds()) -> MonomialIdeal:
    """A proper nonzero monomial ideal."""
    while True:
        n = rng.randint(1, b.max_n)
        count = rng.randint(min(2, b.max_gens), b.max_gens)
        gens = [[rng.randint(0, b.max_exponent) for _ in range(n)] for _ in range(count)]
        ideal = MonomialIdeal(n, gens)
        if ideal.is_proper():
            return ideal


def random_weights(rng: random.Random, n: int, b: Bounds = Bounds()) -> tuple[int, ...]:
    return tuple(rng.randint(1, b.max_weight) for _ in range(n))


def random_complex(rng: random.Random, b: Bounds = Bounds(), max_n: int | None = None) -> SimplicialComplex:
    """A complex in which every ambient vertex is used."""
    n = rng.randint(1, max_n or b.max_n)
    facets = [[v for v in range(n) if rng.random() < 0.55] for _ in range(rng.randint(1, 5))]
    covered = {v for f in facets for v in f}
    facets += [[v] for v in range(n) if v not in covered]
    return SimplicialComplex.from_facets(n, facets)


# -- individual theorem checks ------------------------------------------------
# each returns None on success or a short description of the failure


def check_betti_rescaling(ideal: MonomialIdeal, w) -> str | None:
    base = multigraded_betti(ideal, 0)
    weighted = multigraded_betti(weight_ideal(ideal, w), 0)
    if base.rescaled(w) != weighted.entries:
        return "weighted Betti table is not the rescaled table"
    return None


def check_koszul_rescaling(ideal: MonomialIdeal, w) -> str | None:
    weighted = weight_ideal(ideal, w)
    for b in product(*(range(t + 1) for t in ideal.lcm())):
        wb = tuple(x * y for x, y in zip(b, w))
        if upper_koszul(ideal, b) != upper_koszul(weighted, wb):
            return f"upper Koszul complexes differ at b={list(b)}"
    return None


def check_ass(ideal: MonomialIdeal, w) -> str | None:
    a, b = associated_primes(ideal), associated_primes(weight_ideal(ideal, w))
    if a != b:
        return f"Ass differs: {sorted(map(str, a))} vs {sorted(map(str, b))}"
    return None


def check_weighted_decomposition(ideal: MonomialIdeal, w) -> str | None:
    rep = weighted_decomposition_check(ideal, w)
    return None if rep.ok else "; ".join(rep.mismatches)


def check_polarization_ideal(wc: WeightedComplex) -> str | None:
    pol, _ = polarize(wc)
    expected, _ = polarize_ideal(sr_ideal_weighted(wc), widths=wc.weights)
    if sr_ideal(pol) != expected:
        return "SR ideal of the polarization differs from the polarized weighted SR ideal"
    return None


def check_polarization_invariants(ideal: MonomialIdeal) -> str | None:
    pol, _ = polarize_ideal(ideal)
    a, b = multigraded_betti(ideal, 0), multigraded_betti(pol, 0)
    if a.graded() != b.graded():
        return "graded Betti tables differ"
    if height(ideal) != height(pol):
        return f"heights differ: {height(ideal)} vs {height(pol)}"
    if a.projective_dimension() != b.projective_dimension():
        return "projective dimensions differ"
    if a.regularity() != b.regularity():
        return "regularities differ"
    return None


def check_hilbert_relation(wc: WeightedComplex) -> str | None:
    ideal = sr_ideal_weighted(wc)
    pol, _ = polarize(wc)
    rho = sum(wc.weights) - wc.n
    hs = hilbert_series(ideal, 0)
    hs_pol = hilbert_series(sr_ideal(pol), 0)
    if hs_pol.nvars != hs.nvars + rho:
        return "polarized ring has the wrong number of variables"
    if not hs_pol.times_one_minus_t(rho).equals(hs):
        return f"Hilbert series mismatch: {hs.format()} vs {hs_pol.format()}"
    return None


def suspend_sequence(c: SimplicialComplex, order) -> SimplicialComplex:
    """One-point suspensions at original vertices in ``order``, relabelled canonically."""
    owner = list(range(c.n))
    cur = c
    for i in order:
        v = owner.index(i)  # any current copy of vertex i
        cur, vmap = one_point_suspension(cur, v)
        nxt = [0] * vmap.total
        for u in range(vmap.original_n):
            for k in vmap.copy_ids(u):
                nxt[k] = owner[u]
        owner = nxt
    d = [order.count(i) for i in range(c.n)]
    canon = WreathVertexMap(tuple(x + 1 for x in d))
    seen = [0] * c.n
    mapping = []
    for i in owner:
        mapping.append(canon.copy_id(i, seen[i]))
        seen[i] += 1
    return cur.relabel(mapping, canon.total)


def check_suspension_commutativity(c: SimplicialComplex, order) -> str | None:
    d = [order.count(i) for i in range(c.n)]
    target, _ = mixed_wreath(c, d)
    if suspend_sequence(c, order) != target:
        return f"suspensions in order {list(order)} differ from the mixed wreath product"
    if suspend_sequence(c, list(reversed(order))) != target:
        return "reversed order gives a different complex"
    return None


def check_euler_poincare(c: SimplicialComplex) -> str | None:
    h = reduced_homology_dims(c, 0)
    if sum((-1) ** (i - 1) * x for i, x in enumerate(h)) != reduced_euler_characteristic(c):
        return "alternating sum of Betti numbers differs from the reduced Euler characteristic"
    return None


def check_transport(c: SimplicialComplex, d) -> str | None:
    rep = property_transport_report(c, d)
    return f"transport violated for {rep.violations}" if rep.violations else None


def check_chain(c: SimplicialComplex) -> str | None:
    bad = implication_chain_violations(c)
    return "; ".join(bad) if bad else None


def check_ntf_weighted(ideal: MonomialIdeal, w) -> str | None:
    a = normally_torsion_free_upto(ideal, 2)
    b = normally_torsion_free_upto(weight_ideal(ideal, w), 2)
    if a.holds != b.holds or a.first_failure != b.first_failure:
        return f"NTF verdicts differ: {a.first_failure} vs {b.first_failure}"
    return None


# -- suites -----------------------------------------------------------------


def _ideal_and_weights(rng, b):
    ideal = random_ideal(rng, b)
    w = random_weights(rng, ideal.n, b)
    return (ideal, w), {"ideal": ideal.to_json(), "weights": list(w)}


def _weighted_complex(rng, b):
    c = random_complex(rng, b)
    wc = WeightedComplex(c, random_weights(rng, c.n, b))
    return (wc,), wc.to_json()


def _ideal(rng, b):
    ideal = random_ideal(rng, b)
    return (ideal,), ideal.to_json()


def _suspension_order(rng, b):
    c = random_complex(rng, b, max_n=4)
    order = [rng.randrange(c.n) for _ in range(rng.randint(1, 3))]
    return (c, order), {"complex": c.to_json(), "order": order}


def _complex(rng, b):
    c = random_complex(rng, b)
    return (c,), c.to_json()


def _complex_and_dims(rng, b):
    c = random_complex(rng, b)
    d = [rng.randint(0, b.max_wreath_d) for _ in range(c.n)]
    return (c, d), {"complex": c.to_json(), "d": d}


def _small_ideal_and_weights(rng, b):
    small = Bounds(max_n=min(b.max_n, 4), max_exponent=1, max_weight=b.max_weight, max_gens=4)
    return _ideal_and_weights(rng, small)


@dataclass(frozen=True)
class Suite:
    name: str
    make: Callable
    check: Callable


SUITES: tuple[Suite, ...] = (
    Suite("betti_rescaling", _ideal_and_weights, check_betti_rescaling),
    Suite("koszul_rescaling", _ideal_and_weights, check_koszul_rescaling),
    Suite("ass_weighted", _ideal_and_weights, check_ass),
    Suite("weighted_decomposition", _ideal_and_weights, check_weighted_decomposition),
    Suite("polarization_ideal", _weighted_complex, check_polarization_ideal),
    Suite("polarization_invariants", _ideal, check_polarization_invariants),
    Suite("hilbert_relation", _weighted_complex, check_hilbert_relation),
    Suite("suspension_commutativity", _suspension_order, check_suspension_commutativity),
    Suite("euler_poincare", _complex, check_euler_poincare),
    Suite("ntf_weighted", _small_ideal_and_weights, check_ntf_weighted),
    Suite("property_transport", _complex_and_dims, check_transport),
    Suite("implication_chain", _complex, check_chain),
)

SUITE_NAMES = tuple(s.name for s in SUITES)


@dataclass
class SuiteResult:
    name: str
    trials: int
    failures: list[dict] = field(default_factory=list)
    skipped: int = 0

    def to_json(self) -> dict:
        return {"name": self.name, "trials": self.trials, "skipped": self.skipped, "failures": self.failures}


@dataclass
class VerifyReport:
    seed: int
    trials: int
    bounds: Bounds
    suites: list[SuiteResult]

    @property
    def ok(self) -> bool:
        return not any(s.failures for s in self.suites)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "bounds": self.bounds.__dict__,
            "ok": self.ok,
            "suites": [s.to_json() for s in self.suites],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def trial_rng(seed: int, suite: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{trial}")


def run_suite(suite: Suite, seed: int, trials: int, bounds: Bounds = Bounds()) -> SuiteResult:
    res = SuiteResult(suite.name, trials)
    for t in range(trials):
        args, instance = suite.make(trial_rng(seed, suite.name, t), bounds)
        try:
            problem = suite.check(*args)
        except ResourceLimit:
            res.skipped += 1
            continue
        if problem is not None:
            res.failures.append({"trial": t, "seed": f"{seed}:{suite.name}:{t}", "instance": instance, "detail": problem})
    return res


def verify(
    trials: int = 50,
    seed: int = 0,
    bounds: Bounds = Bounds(),
    suites: tuple[str, ...] | None = None,
) -> VerifyReport:
    chosen = [s for s in SUITES if suites is None or s.name in suites]
    unknown = set(suites or ()) - set(SUITE_NAMES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    return VerifyReport(seed, trials, bounds, [run_suite(s, seed, trials, bounds) for s in chosen])
