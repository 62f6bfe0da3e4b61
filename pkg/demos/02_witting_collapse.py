"""The 240 vertices of the Witting polytope collapse to the same 40 rays.

Every ray carries six vertices (its multiples by the sixth roots of
unity), so the polytope's vertex set is a scaled copy of the Penrose
system read in a different basis.
"""

from __future__ import annotations

from collections import Counter

from wittingrays.golden import load_table1
from wittingrays.penrose import canonical_penrose_system
from wittingrays.witting import collapse_to_rays, generate_witting_vertices, ray_fibers

vertices = generate_witting_vertices()
print(f"{len(vertices)} vertices, squared norms {Counter(int(v.norm_squared().as_fraction()) for v in vertices)}")

fibers = ray_fibers(vertices)
print(f"{len(fibers)} rays, fiber sizes {Counter(len(f) for f in fibers.values())}")

rays = set(collapse_to_rays(vertices))
print("equal to the golden canonical table:", rays == set(load_table1().values()))
print("equal to the dodecahedron pipeline: ", rays == set(canonical_penrose_system().values()))

# %% one fiber in full
ray, members = next(iter(fibers.items()))
print(f"\nfiber of {ray}:")
for v in members:
    print("  ", [str(c.to_eisenstein()) for c in v.components])
