"""Pairwise energies of point configurations on the Riemann sphere.

Two conventions are in use:

* log-chordal energy: ``sum_{i<j} -log [z_i, z_j]``,
* Green energy: ``sum_{i != j} G(z_i, z_j)`` with ``G`` the minus-Green kernel.

For every configuration of ``N`` distinct points they satisfy

    log-chordal = pi * (Green + C_HALF * N * (N - 1)),

which :func:`lemma_conversion` applies.  Pair sums use :func:`math.fsum`, so
the result is the correctly rounded sum of the individually rounded terms.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import CoincidentPoints
from .kernels import C_HALF, COINCIDENCE_TOL, KernelKind
from .sphere_geometry import plane_to_sphere


@dataclass(frozen=True)
class EnergyValue:
    kind: KernelKind
    value: float
    n_points: int


def pair_distances(points):
    """Chordal distances of all unordered pairs ``i < j``.

    Returns ``(i, j, d)`` index arrays and distances.

    Raises
    ------
    CoincidentPoints
        If some pair is closer than ``COINCIDENCE_TOL``; ``pair`` on the
        exception names the first such ``(i, j)``.
    """
    pts = np.atleast_1d(np.asarray(points, dtype=complex))
    s = plane_to_sphere(pts)
    i, j = np.triu_indices(len(pts), k=1)
    d = np.minimum(np.linalg.norm(s[i] - s[j], axis=-1), 1.0)
    bad = np.nonzero(d < COINCIDENCE_TOL)[0]
    if bad.size:
        pair = (int(i[bad[0]]), int(j[bad[0]]))
        raise CoincidentPoints(f"points {pair[0]} and {pair[1]} coincide", pair=pair)
    return i, j, d


def energy_abs(points):
    """Log-chordal energy ``sum_{i<j} -log [z_i, z_j]`` (always >= 0)."""
    pts = np.atleast_1d(points)
    _, _, d = pair_distances(pts)
    return EnergyValue(KernelKind.LogChordalABS, math.fsum(-np.log(d)), len(pts))


def energy_zhong(points):
    """Green energy ``sum_{i != j} G(z_i, z_j) = 2 sum_{i<j} G(z_i, z_j)``."""
    pts = np.atleast_1d(points)
    _, _, d = pair_distances(pts)
    g = -np.log(d) / (2.0 * math.pi) - C_HALF
    return EnergyValue(KernelKind.GreenZhong, 2.0 * math.fsum(g), len(pts))


def lemma_conversion(e, N=None):
    """Convert a Green energy of ``N`` points to the log-chordal energy.

    Returns ``pi * (e.value + C_HALF * N * (N - 1))`` as a log-chordal
    :class:`EnergyValue`.
    """
    if e.kind is not KernelKind.GreenZhong:
        raise ValueError(f"expected a {KernelKind.GreenZhong} energy, got {e.kind}")
    if N is None:
        N = e.n_points
    elif N != e.n_points:
        raise ValueError(f"N={N} does not match the energy's n_points={e.n_points}")
    value = math.pi * (e.value + C_HALF * N * (N - 1))
    return EnergyValue(KernelKind.LogChordalABS, value, N)
