"""Numerical determination of the constants of S(1/2).

The additive constant ``C_HALF`` is fixed by requiring the minus-Green kernel
to integrate to zero against the area form; equivalently

    A * C_HALF = (1/2pi) * integral of -log [z, w] dA(w),   A = pi.

The routines here evaluate that integral by quadrature, in two coordinate
systems, calling the log-chordal kernel itself at the quadrature nodes.  The
Robin constant is recovered as the limit of ``G(z, w) + (1/2pi) log r`` as the
geodesic distance ``r`` shrinks, by Richardson extrapolation.

Adaptive Gauss-Kronrod integration comes from :mod:`scipy.integrate`.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .exceptions import ConvergenceFailure
from .kernels import AREA_S_HALF, green_kernel, log_chordal_kernel
from .sphere_geometry import INF, is_infinite, point_at_distance

#: Default cap on integrand evaluations per quadrature.
MAX_EVALUATIONS = 10**6
# points per subinterval of scipy's 21-point Gauss-Kronrod rule
_GK_POINTS = 21


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


def _quad(f, a, b, tol, max_evals=MAX_EVALUATIONS):
    """Adaptive 1-D quadrature with absolute tolerance ``tol``."""
    limit = max(1, max_evals // _GK_POINTS)
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            out = integrate.quad(f, a, b, epsabs=tol, epsrel=0.0, limit=limit, full_output=1)
        except integrate.IntegrationWarning as exc:
            raise ConvergenceFailure(str(exc)) from exc
    value, err, info = out[:3]
    if len(out) > 3 or not err <= tol:
        raise ConvergenceFailure(f"quadrature error estimate {err:.3g} exceeds {tol:.3g}")
    return QuadratureResult(float(value), float(err), int(info["neval"]))


def _scaled(res, factor):
    return QuadratureResult(res.value * factor, res.error_estimate * abs(factor), res.evaluations)


def compute_C_half_geodesic(tol=1e-10, max_evals=MAX_EVALUATIONS):
    """``C_HALF`` from geodesic polar coordinates about ``z = 0``.

    In those coordinates the area form is ``(1/2) sin(2r) dr dtheta``.
    Substituting ``u = sin r`` turns it into ``u du dtheta`` and removes the
    logarithmic singularity at ``r = 0``; the point at ``u`` is
    ``w = u / sqrt(1 - u^2) = tan r``.  Integrating out ``theta`` leaves

        C_HALF = (1/A) * int_0^1 -log [0, w(u)] u du.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")

    def integrand(u):
        if u >= 1.0:
            return log_chordal_kernel(0.0, INF) * u
        w = u / math.sqrt((1.0 - u) * (1.0 + u))
        return float(log_chordal_kernel(0.0, w)) * u

    res = _quad(integrand, 0.0, 1.0, tol * AREA_S_HALF / 4.0, max_evals)
    return _scaled(res, 1.0 / AREA_S_HALF)


def compute_C_half_planar(tol=1e-10, max_evals=MAX_EVALUATIONS):
    """``C_HALF`` from the affine coordinate, where ``dA = dm(w) / (1 + |w|^2)^2``.

    The plane is split at ``|w| = 1``; the outer part is folded onto the unit
    disk by ``w -> 1/conj(w)``, which preserves ``dA``.  With ``w = rho e^{it}``
    and the angle integrated out,

        C_HALF = (1/(2pi A)) * 2pi * int_0^1 (-log [0, rho] - log [0, 1/rho])
                 rho / (1 + rho^2)^2 drho.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")

    def integrand(rho):
        k = log_chordal_kernel(0.0, rho) + log_chordal_kernel(0.0, 1.0 / rho)
        return float(k) * rho / (1.0 + rho * rho) ** 2

    res = _quad(integrand, 0.0, 1.0, tol * AREA_S_HALF / 4.0, max_evals)
    return _scaled(res, 2.0 * math.pi / (2.0 * math.pi * AREA_S_HALF))


def planar_area(tol=1e-12):
    """Total mass of ``dm(w) / (1 + |w|^2)^2`` over the plane (should be pi)."""
    res = _quad(lambda rho: rho / (1.0 + rho * rho) ** 2, 0.0, np.inf, tol / (4.0 * math.pi))
    return _scaled(res, 2.0 * math.pi)


def robin_sequence(z, levels=range(4, 21), angle=0.0):
    """Values of ``G(z, w_r) + (1/2pi) log r`` at ``r = 2^-k`` for ``k`` in ``levels``.

    ``w_r`` is an actual point at geodesic distance ``r`` from ``z``.
    """
    r = np.array([2.0**-k for k in levels])
    w = point_at_distance(z, r, angle)
    return r, green_kernel(z, w) + np.log(r) / (2.0 * math.pi)


def richardson(values, ratio=4.0):
    """Richardson tableau for a sequence whose error is a series in ``h``.

    ``values[k]`` is the approximation at step ``h_k`` with ``h_{k+1} =
    h_k / ratio``.  Returns the diagonal of the tableau.
    """
    values = np.asarray(values, dtype=float)
    diag = []
    row = []
    for v in values:
        new = [v]
        for j, prev in enumerate(row, start=1):
            new.append(new[j - 1] + (new[j - 1] - prev) / (ratio**j - 1.0))
        row = new
        diag.append(row[-1])
    return np.array(diag)


def compute_robin_constant(z, tol=1e-8, angle=0.0):
    """Robin constant of S(1/2) at ``z``.

    Extrapolates ``G(z, w_r) + (1/2pi) log r`` to ``r -> 0`` from the radii
    ``r = 2^-k``, ``k = 4..20``.  The correction term ``-(1/2pi) log(sin r / r)``
    is even in ``r``, so extrapolation runs in ``r^2`` (step ratio 4).

    Raises
    ------
    ConvergenceFailure
        If successive extrapolants never agree to ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _, seq = robin_sequence(z, angle=angle)
    diag = richardson(seq, ratio=4.0)
    steps = np.abs(np.diff(diag))
    hits = np.nonzero(steps <= tol)[0]
    if hits.size == 0:
        raise ConvergenceFailure(
            f"Robin extrapolation did not settle to {tol:.3g} (last step {steps[-1]:.3g})"
        )
    return float(diag[hits[0] + 1])


def _fold_to_unit_disk(z):
    # w -> 1/conj(w) is an isometry of S(1/2) preserving dA
    if is_infinite(z):
        return 0.0 + 0.0j
    z = complex(z)
    return 1.0 / z.conjugate() if abs(z) > 1.0 else z


def mean_zero_check(z, tol=1e-8, max_angles=1024):
    """``int G(z, w) dA(w)`` over S(1/2), computed in the plane.

    Uses planar polar coordinates ``w = z + rho e^{it}`` centred on ``z`` (after
    folding ``z`` into the unit disk) with ``rho = s / (1 - s)``.  The radial
    integral is adaptive and vectorised over a trapezoid grid in ``t``; the grid
    is doubled until two successive angular sums agree.  The integrand is
    periodic and smooth in ``t`` so the trapezoid rule converges geometrically.

    Raises
    ------
    ConvergenceFailure
        If the quadrature's own error estimate exceeds ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    zc = _fold_to_unit_disk(z)

    def radial(m):
        t = 2.0 * math.pi * np.arange(m) / m
        e = np.exp(1j * t)

        def f(s):
            if s <= 0.0 or s >= 1.0:
                return np.zeros(m)
            rho = s / (1.0 - s)
            w = zc + rho * e
            dens = 1.0 / (1.0 + np.abs(w) ** 2) ** 2
            return green_kernel(zc, w) * dens * rho / (1.0 - s) ** 2

        vals, err = integrate.quad_vec(f, 0.0, 1.0, epsabs=tol / 20.0, epsrel=0.0, norm="max")
        w_t = 2.0 * math.pi / m
        return float(np.sum(vals) * w_t), float(err * 2.0 * math.pi)

    m = 8
    prev, err = radial(m)
    while True:
        m *= 2
        cur, err = radial(m)
        if abs(cur - prev) <= tol / 10.0:
            break
        if m >= max_angles:
            raise ConvergenceFailure(f"angular sum unsettled at {m} nodes: {abs(cur - prev):.3g}")
        prev = cur
    if err > tol:
        raise ConvergenceFailure(f"radial error estimate {err:.3g} exceeds {tol:.3g}")
    return cur


def helper_integrals(tol=1e-13):
    """Closed-form one-dimensional integrals appearing in the derivation of ``C_HALF``.

    Returns ``[(name, value), ...]`` with

    * ``sin``: int_0^pi sin(phi) dphi = 2,
    * ``log_chord_sin``: int_0^pi log sqrt(2 (1 - cos phi)) sin(phi) dphi
      = log(4/e),
    * ``area_times_C_half``: -(1/4) log_chord_sin - (1/4) log(1/2) sin = 1/4.

    ``2 (1 - cos phi)`` is evaluated as ``4 sin^2(phi/2)`` to avoid
    cancellation near ``phi = 0``.
    """
    sin_int = _quad(math.sin, 0.0, math.pi, tol).value
    log_int = _quad(
        lambda p: math.log(2.0 * math.sin(0.5 * p)) * math.sin(p) if p > 0 else 0.0,
        0.0,
        math.pi,
        tol,
    ).value
    combo = -0.25 * log_int - 0.25 * math.log(0.5) * sin_int
    return [("sin", sin_int), ("log_chord_sin", log_int), ("area_times_C_half", combo)]
