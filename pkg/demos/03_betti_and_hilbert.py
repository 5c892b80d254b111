"""Betti tables and Hilbert series, and how weighting and polarization move them."""

from wsckit import WeightedComplex, from_facets, polarize, sr_ideal, sr_ideal_weighted
from wsckit.homology import hilbert_series, multigraded_betti, projective_dimension, regularity
from wsckit.monomial import cycle_graph, edge_ideal, weight_ideal

triangle = edge_ideal(cycle_graph(3))
print("edge ideal of a triangle")
print(multigraded_betti(triangle).format())

# Weighting rescales multidegrees but keeps the multigraded Betti numbers.
w = (2, 1, 3)
weighted = weight_ideal(triangle, w)
plain, heavy = multigraded_betti(triangle), multigraded_betti(weighted)
print("\nweights", w)
for (i, b), value in sorted(plain.entries.items()):
    wb = tuple(x * y for x, y in zip(w, b))
    print(f"  beta_{i},{b} = {value}   beta_{i},{wb} of the weighted ideal = {heavy.entries.get((i, wb), 0)}")

# Polarization preserves pd and regularity; Hilbert numerators pick up (1-t)^rho.
wc = WeightedComplex(from_facets(4, [[0, 1], [1, 2], [2, 3]]), (2, 1, 1, 2))
ideal = sr_ideal_weighted(wc)
pol, _ = polarize(wc)
pol_ideal = sr_ideal(pol)
print("\nweighted SR ideal vs SR ideal of the polarization")
print("  pd:", projective_dimension(ideal), projective_dimension(pol_ideal))
print("  reg:", regularity(ideal), regularity(pol_ideal))
hs, hs_pol = hilbert_series(ideal), hilbert_series(pol_ideal)
rho = sum(wc.weights) - wc.n
print("  H(R/I):    ", hs.format())
print("  H(R'/I'):  ", hs_pol.format())
print(f"  H(R'/I') * (1-t)^{rho} equals H(R/I):", hs_pol.times_one_minus_t(rho).equals(hs))
