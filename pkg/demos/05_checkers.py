"""Combinatorial properties, and their survival under mixed wreath products."""

from wsckit import (
    from_facets,
    is_cohen_macaulay_reisner,
    is_constructible_bounded,
    mixed_wreath,
    property_transport_report,
    shelling_order,
    vertex_decomposition,
)

bowtie = from_facets(5, [[0, 1, 2], [2, 3, 4]])
octahedron = from_facets(6, [[a, b, c] for a in (0, 3) for b in (1, 4) for c in (2, 5)])
rp2 = from_facets(
    6,
    [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5], [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5]],
)

for name, c in (("octahedron", octahedron), ("bowtie", bowtie), ("projective plane", rp2)):
    print(name)
    print("  shedding order:", vertex_decomposition(c))
    print("  shelling:", shelling_order(c))
    print("  constructible:", is_constructible_bounded(c))
    print("  CM over Q:", is_cohen_macaulay_reisner(c, 0), " over GF(2):", is_cohen_macaulay_reisner(c, 2))

# Each property holds for the base exactly when it holds for the wreath product.
# Past the facet bounds a verdict is None and the comparison is skipped.
for c, d in ((octahedron, [1, 0, 0, 1, 0, 0]), (bowtie, [0, 1, 0, 0, 1])):
    w, _ = mixed_wreath(c, d)
    rep = property_transport_report(c, d)
    print(f"\nwreath with d={d}: {len(w.facets)} facets on {w.n} vertices")
    for prop in rep.base:
        print(f"  {prop:<20} base={rep.base[prop]!s:<6} wreath={rep.wreath[prop]}")
    print("  violations:", rep.violations, " undecided:", rep.undecided)
