"""Primary decompositions, associated primes, symbolic powers and normal torsion freeness."""

from wsckit import associated_primes, normally_torsion_free_upto, primary_decomposition, symbolic_power
from wsckit.monomial import MonomialIdeal, cycle_graph, edge_ideal, format_ideal, power

ideal = MonomialIdeal(3, [[2, 3, 0], [0, 3, 4], [2, 0, 4]])
print("I =", format_ideal(ideal))
for comp in primary_decomposition(ideal).components:
    print("  component", format_ideal(comp.ideal), "with radical", comp.radical)
print("Ass(R/I) =", sorted(map(str, associated_primes(ideal))))
print("Ass of the squarefree triangle ideal:", sorted(map(str, associated_primes(edge_ideal(cycle_graph(3))))))

# An embedded prime shows up when the components do not all share a height.
emb = MonomialIdeal(2, [[2, 0], [1, 1]])
print("\n", format_ideal(emb), "=", " cap ".join(format_ideal(q) for q in primary_decomposition(emb).ideals()))

# The triangle is the smallest odd cycle: its square has the maximal ideal as an embedded prime.
tri = edge_ideal(cycle_graph(3))
print("\nx1*x2*x3 in I^(2):", symbolic_power(tri, 2).contains((1, 1, 1)), " in I^2:", power(tri, 2).contains((1, 1, 1)))
for g, name in ((3, "triangle"), (4, "square")):
    for w in (None, (2, 3, 1, 2)[:g]):
        v = normally_torsion_free_upto(edge_ideal(cycle_graph(g), w), 3)
        label = f"{name}, weights {w}" if w else name
        print(f"  {label:<26} holds up to 3: {v.holds}, first failure: {v.first_failure}")
