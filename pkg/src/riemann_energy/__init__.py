"""Logarithmic and Green energies of points on the Riemann sphere S(1/2)."""

from .asymptotics import abs_formula, reconciliation_gap, zhong_formula
from .energy import EnergyValue, energy_abs, energy_zhong, lemma_conversion
from .ensemble import KostlanPolynomial, evaluate, polynomial_roots, sample_kostlan
from .exceptions import (
    CoincidentPoints,
    ConvergenceFailure,
    DegreeOutOfRange,
    RootFindingFailure,
    TooManyRejections,
)
from .kernels import C_HALF, F_HALF, green_kernel, log_chordal_kernel
from .sphere_geometry import INF, chordal_distance, geodesic_distance, plane_to_sphere

__version__ = "0.1.0"
