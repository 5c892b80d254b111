"""Building mixed wreath products by hand and checking their face counts."""

from wsckit import boundary_simplex, from_facets, mixed_wreath, one_point_suspension, reduced_join
from wsckit.wreath import wreath_f_formula

# Two isolated points.  Suspending at the first one splits it into two copies
# and glues the pieces into a triangle boundary.
two_points = from_facets(2, [[0], [1]])
s, vmap = one_point_suspension(two_points, 0)
print("suspension of two points:", s.facets, "labels", vmap.labels(["v1", "v2"]))
print("  same as the boundary of a triangle:", s == boundary_simplex(2))

# A reduced join of dimension d is d suspensions at the same vertex.
path = from_facets(3, [[0, 1], [1, 2]])
rj, vmap = reduced_join(path, 1, 2)
print("\nreduced join of a path at its middle vertex, d=2:")
for f in rj.facets:
    print("  ", f)

# Replacing every vertex at once: the octahedron with per-vertex dimensions.
octahedron = from_facets(6, [[a, b, c] for a in (0, 3) for b in (1, 4) for c in (2, 5)])
d = (2, 1, 2, 1, 3, 3)
w, vmap = mixed_wreath(octahedron, d)
f0, f_top = wreath_f_formula(octahedron, d)
print(f"\noctahedron wreath with d={d}: {w.n} vertices, dimension {w.dim}")
print(f"  closed form f0={f0}, top faces={f_top}; counted: {w.f_vector()[0]}, {w.f_vector()[-1]}")
print("  copies per vertex:", vmap.copies, "offsets:", vmap.offsets)
