"""Chordal and geodesic distance on the Riemann sphere S(1/2).

Run with ``python demos/01_sphere_geometry.py``.
"""

import numpy as np

from riemann_energy.sphere_geometry import (
    INF,
    affine_chordal_distance,
    chordal_distance,
    geodesic_distance,
    mobius_rotation,
    plane_to_sphere,
    random_rotation,
)

# Stereographic images: 0 is the south pole, infinity the north pole, and the
# unit circle the equator at height 1/2.
for z in (0, 1, 1j, -1, INF):
    print(f"{z!s:>10} -> {plane_to_sphere(z)}")

# The chord between images is the chordal distance; the sphere has diameter 1.
print("[0, inf] =", chordal_distance(0, INF))
print("[0, 1]   =", chordal_distance(0, 1), "  1/sqrt(2) =", 1 / np.sqrt(2))

# Arc length r on a sphere of radius 1/2 satisfies [z, w] = sin r.
print("geodesic(0, 1) =", geodesic_distance(0, 1), "  pi/4 =", np.pi / 4)

# The affine formula loses everything once |z|^2 overflows; the chord does not.
for big in (1e6, 1e100, 1e200):
    print(f"|z|={big:.0e}: chord {chordal_distance(big, 1.0):.15f}  affine {affine_chordal_distance(big, 1.0):.15f}")

# Rotations of the sphere act as unitary Mobius maps and preserve distances.
rng = np.random.default_rng(0)
a, b = random_rotation(rng)
z, w = 0.3 + 2j, -5.0
print("before", chordal_distance(z, w), "after", chordal_distance(mobius_rotation(z, a, b), mobius_rotation(w, a, b)))
