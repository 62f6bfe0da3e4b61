"""Build the 40 Penrose rays from a regular dodecahedron.

Each vertex direction gives a spin-3/2 state whose three Majorana points
are the vertex (twice) and its antipode. The three explicit rays of a
vertex's neighbors are completed by a fourth, implicit ray. A unitary
change of basis then makes every component a signed cube root of unity.
"""

from __future__ import annotations

from wittingrays.numerics import proj_equal
from wittingrays.penrose import (
    antipode,
    build_dodecahedron,
    canonical_penrose_system,
    explicit_ray,
    implicit_ray,
    is_unitary,
    neighbors,
    omega_matrix,
    wigner_projection_ray,
)

model = build_dodecahedron()
print("vertex  theta    phi     neighbors  antipode")
for v, d in model.directions.items():
    print(f"  {v}    {d.theta:6.3f}  {d.phi:6.3f}   {''.join(sorted(neighbors(model, v)))}        {antipode(model, v)}")

# %% the Majorana construction agrees with rotating |3/2, +1/2>
agree = sum(proj_equal(explicit_ray(model, v), wigner_projection_ray(d)) for v, d in model.directions.items())
print(f"\nexplicit rays matching the rotation oracle: {agree}/20")

a_prime = implicit_ray(model, "A")
print("implicit A' (float):", [f"{c:.4f}" for c in a_prime.to_complex()])

# %% change basis and snap to exact Eisenstein integers
print("change of basis unitary:", is_unitary(omega_matrix()))
for label, ray in list(canonical_penrose_system().items())[:12]:
    print(f"  {label:3s} {ray}")
print("  ...")
