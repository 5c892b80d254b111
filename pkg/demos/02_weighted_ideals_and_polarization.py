"""Weighted Stanley-Reisner ideals and polarization of weighted complexes."""

from wsckit import WeightedComplex, boundary_simplex, from_facets, full_simplex, polarize, sr_ideal, sr_ideal_weighted
from wsckit.monomial import format_ideal, polarize_ideal

names = ["a", "b", "c", "d"]
wc = WeightedComplex(from_facets(4, [[0, 1], [0, 2], [1, 2], [3]]), (3, 4, 5, 2))
print("unweighted SR ideal:", format_ideal(sr_ideal(wc.complex), names))
print("weighted SR ideal:  ", format_ideal(sr_ideal_weighted(wc), names))

# Polarizing a weighted complex gives an ordinary complex on sum(w) vertices.
pol, vmap = polarize(WeightedComplex(full_simplex(2), (1, 2, 3)))
print("\nfull triangle with weights (1,2,3) polarizes to", pol.facets)

pol, vmap = polarize(WeightedComplex(from_facets(2, [[0], [1]]), (4, 1)))
labels = vmap.labels(["a", "b"])
print("two points with weights (4,1) polarize to the boundary of a 4-simplex:", pol == boundary_simplex(4))
print("  its SR ideal:", format_ideal(sr_ideal(pol), labels))

# The combinatorial polarization matches the algebraic one on the ideal side.
wc = WeightedComplex(from_facets(3, [[0, 1], [2]]), (2, 1, 3))
pol, _ = polarize(wc)
alg, _ = polarize_ideal(sr_ideal_weighted(wc))
print("\nSR ideal of the polarized complex equals the polarized weighted SR ideal:", sr_ideal(pol) == alg)
