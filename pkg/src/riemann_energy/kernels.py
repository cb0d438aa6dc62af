"""Pair kernels on S(1/2) and the constants relating them.

Two kernels are used for the energy of a point configuration:

* the log-chordal kernel ``-log [z, w]`` (summed over unordered pairs), and
* the minus-Green kernel ``G(z, w) = -(1/2pi) log [z, w] - C_HALF``
  (summed over ordered pairs), which has mean zero against the area form.

They are related by ``-log [z, w] = 2 pi (G(z, w) + C_HALF)``.  Only ``G`` is
exposed; the usual Green's function is ``-G``.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import CoincidentPoints
from .sphere_geometry import chordal_distance

#: Additive constant turning ``-(1/2pi) log [z, w]`` into the mean-zero kernel.
C_HALF = 1.0 / (4.0 * math.pi)
#: Robin constant of S(1/2): constant term of ``G`` against ``-(1/2pi) log r``.
F_HALF = -1.0 / (4.0 * math.pi)
#: Total area of S(1/2).
AREA_S_HALF = math.pi

#: Chordal distances below this are treated as coincident points.
COINCIDENCE_TOL = 1e-14


@dataclass(frozen=True)
class SphereConstants:
    C_half: float = C_HALF
    F_half: float = F_HALF
    area_S_half: float = AREA_S_HALF


CONSTANTS = SphereConstants()


class KernelKind(enum.Enum):
    LogChordalABS = "log_chordal_abs"
    GreenZhong = "green_zhong"


def _checked_distance(z, w):
    d = chordal_distance(z, w)
    if np.any(d < COINCIDENCE_TOL):
        raise CoincidentPoints(f"coincident points (chordal distance {np.min(d):.3g})")
    return d


def log_chordal_kernel(z, w):
    """``-log [z, w]`` (natural log); non-negative since ``[z, w] <= 1``.

    Raises
    ------
    CoincidentPoints
        If ``z`` and ``w`` coincide.
    """
    return -np.log(_checked_distance(z, w))


def green_kernel(z, w):
    """Minus the Green's function of S(1/2): ``-(1/2pi) log [z, w] - 1/(4pi)``.

    Attains its minimum ``F_HALF`` at antipodal pairs.
    """
    return -np.log(_checked_distance(z, w)) / (2.0 * math.pi) - C_HALF


def convert_green_to_log_chordal(g):
    """Map a :func:`green_kernel` value to the log-chordal value of the same pair."""
    return 2.0 * math.pi * (np.asarray(g) + C_HALF)
