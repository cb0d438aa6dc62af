"""Kostlan random polynomials and their zeros on the sphere.

Run with ``python demos/04_kostlan_roots.py``.
"""

import numpy as np

from riemann_energy.ensemble import evaluate, polynomial_roots, sample_kostlan
from riemann_energy.sphere_geometry import plane_to_sphere

p = sample_kostlan(40, seed=2026)
print("degree", p.degree, "scale exponent", p.scale_exponent)
print("|coefficients| (scaled):", np.round(np.abs(p.coefficients[:6]), 3), "...")

roots = polynomial_roots(p)
print(f"{len(roots)} roots, moduli from {np.abs(roots).min():.3g} to {np.abs(roots).max():.3g}")

expanded = np.poly(roots)[::-1] * p.coefficients[-1]
err = np.max(np.abs(expanded - p.coefficients)) / np.max(np.abs(p.coefficients))
print(f"coefficient reconstruction error {err:.2e}")
print(f"largest |p(root)| {np.max(np.abs(evaluate(p, roots))):.2e} (unscaled polynomial)")

# The zero process is rotation invariant: pooled zeros look uniform on S(1/2).
pooled = np.concatenate([polynomial_roots(sample_kostlan(40, [3, k])) for k in range(200)])
s = plane_to_sphere(pooled)
print("mean sphere position of 8000 zeros:", np.round(s.mean(axis=0), 4), " (uniform: [0, 0, 0.5])")
