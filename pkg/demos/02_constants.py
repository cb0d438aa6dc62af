"""The constant C_half = 1/(4 pi) and the Robin constant -1/(4 pi), numerically.

C_half is whatever makes ``-(1/2pi) log [z, w] - C_half`` integrate to zero over
the sphere; the Robin constant is the finite part of that kernel as ``w -> z``.

Run with ``python demos/02_constants.py``.
"""

import math

from riemann_energy import quadrature as q
from riemann_energy.sphere_geometry import INF

exact = 1 / (4 * math.pi)
print(f"1/(4 pi)             = {exact:.16f}")

geo = q.compute_C_half_geodesic(1e-12)
planar = q.compute_C_half_planar(1e-12)
print(f"C_half (geodesic)    = {geo.value:.16f}   est. err {geo.error_estimate:.1e}, {geo.evaluations} evals")
print(f"C_half (planar)      = {planar.value:.16f}   est. err {planar.error_estimate:.1e}, {planar.evaluations} evals")
print(f"area of S(1/2)       = {q.planar_area().value:.16f}")

# The finite part G(z, w_r) + (1/2pi) log r approaches its limit like r^2,
# so a handful of halvings plus Richardson extrapolation pins it down.
r, seq = q.robin_sequence(0.0, levels=range(2, 9))
diag = q.richardson(seq)
print("\n     r        raw value            extrapolated")
for ri, s, d in zip(r, seq, diag):
    print(f"{ri:8.5f}  {s:.15f}  {d:.15f}")

for z in (0.0, 1 + 1j, -7 + 3j, INF):
    print(f"Robin constant at {z!s:>8}: {q.compute_robin_constant(z, 1e-10):.15f}")

print("\nMean of the Green kernel over the sphere:")
for z in (0.0, 3 - 2j, INF):
    print(f"  z = {z!s:>8}: {q.mean_zero_check(z, 1e-9):+.2e}")

print("\nOne-dimensional integrals in the derivation:")
for name, value in q.helper_integrals():
    print(f"  {name:18s} {value:.15f}")
print(f"  log(4/e)           {math.log(4 / math.e):.15f}")
