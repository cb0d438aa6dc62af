"""Kostlan random polynomials and their zeros.

A degree-``N`` Kostlan (elliptic) polynomial is ``sum_k a_k sqrt(C(N, k)) z^k``
with i.i.d. standard complex Gaussian ``a_k``; its zeros form a
rotation-invariant point process on the Riemann sphere.

Coefficients are stored in ascending order of powers, scaled by a power of two
so the largest lies in ``[2^-10, 2^10]``.  Scaling leaves the zeros unchanged.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .exceptions import DegreeOutOfRange, RootFindingFailure

MAX_DEGREE = 2000
#: Largest degree for which the companion-matrix fallback is attempted.
COMPANION_MAX_DEGREE = 64
#: Accepted per-root relative backward error ``|p(z)| / sum |c_k| |z|^k``.
RESIDUAL_TOL = 1e-10

_EPS = np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class KostlanPolynomial:
    """Polynomial ``2**scale_exponent * sum_k coefficients[k] z^k``."""

    degree: int
    coefficients: np.ndarray
    scale_exponent: int = 0

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=complex)
        if c.shape != (self.degree + 1,):
            raise ValueError(f"expected {self.degree + 1} coefficients, got {c.shape}")
        if c[-1] == 0:
            raise ValueError("leading coefficient must be non-zero")
        object.__setattr__(self, "coefficients", c)

    @classmethod
    def from_coefficients(cls, coefficients):
        """Wrap explicit ascending coefficients (no randomness, no scaling)."""
        c = np.asarray(coefficients, dtype=complex)
        return cls(len(c) - 1, c, 0)

    def unscaled_coefficients(self):
        return np.ldexp(self.coefficients.real, self.scale_exponent) + 1j * np.ldexp(
            self.coefficients.imag, self.scale_exponent
        )


def log_binomial(n, k):
    """``log C(n, k)`` via log-gamma; exact integers overflow near ``n = 60``."""
    k = np.asarray(k, dtype=float)
    return gammaln(n + 1.0) - gammaln(k + 1.0) - gammaln(n - k + 1.0)


def sample_kostlan(N, seed):
    """Draw a degree-``N`` Kostlan polynomial.

    Parameters
    ----------
    N : int
        Degree, ``1 <= N <= 2000``.
    seed : int, sequence of int, or numpy.random.SeedSequence
        Anything :func:`numpy.random.default_rng` accepts.  Equal seeds give
        equal polynomials.
    """
    if not (isinstance(N, (int, np.integer)) and 1 <= N <= MAX_DEGREE):
        raise DegreeOutOfRange(f"degree must be an integer in [1, {MAX_DEGREE}], got {N!r}")
    N = int(N)
    rng = np.random.default_rng(seed)
    half_log_binom = 0.5 * log_binomial(N, np.arange(N + 1))
    while True:
        g = rng.standard_normal((N + 1, 2)) * math.sqrt(0.5)
        a = g[:, 0] + 1j * g[:, 1]
        if a[-1] != 0:
            break
    with np.errstate(divide="ignore"):
        log2_mag = (np.log(np.abs(a)) + half_log_binom) / math.log(2.0)
    scale = int(np.round(np.max(log2_mag)))
    coeffs = a * np.exp(half_log_binom - scale * math.log(2.0))
    return KostlanPolynomial(N, coeffs, scale)


def _horner(c, x):
    """Value and derivative of ``sum c[k] x^k`` at every ``x``."""
    p = np.full(x.shape, c[-1], dtype=complex)
    dp = np.zeros(x.shape, dtype=complex)
    for ck in c[-2::-1]:
        dp = dp * x + p
        p = p * x + ck
    return p, dp


def evaluate(p, z):
    """Evaluate ``p`` at ``z`` (scalar or array) by Horner's rule."""
    z = np.asarray(z, dtype=complex)
    val, _ = _horner(p.coefficients, z)
    out = np.ldexp(val.real, p.scale_exponent) + 1j * np.ldexp(val.imag, p.scale_exponent)
    return out[()] if out.ndim == 0 else out


def _newton_and_backward_error(c, z):
    """Newton correction ``p/p'`` and relative backward error at each ``z``.

    Inside the unit disk ``p`` is evaluated directly; outside, through the
    reversed polynomial in ``y = 1/z`` so Horner's rule never sees ``|x| > 1``:
    ``p/p' = 1 / (y (N - y q'(y)/q(y)))`` with ``q(y) = y^N p(1/y)``.
    """
    n = len(c) - 1
    inner = np.abs(z) <= 1.0
    absc = np.abs(c)

    x = np.where(inner, z, 0.0)
    p, dp = _horner(c, x)
    pt, _ = _horner(absc, np.abs(x))

    with np.errstate(divide="ignore", invalid="ignore"):
        y = np.where(inner, 0.0, 1.0 / z)
        q, dq = _horner(c[::-1], y)
        qt, _ = _horner(absc[::-1], np.abs(y))

        corr_in = p / dp
        corr_out = 1.0 / (y * (n - y * dq / q))
        corr = np.where(inner, corr_in, corr_out)
        berr = np.where(inner, np.abs(p) / pt.real, np.abs(q) / qt.real)
    corr = np.where(np.isfinite(corr), corr, 0.0)
    return corr, berr


def _upper_hull(x, y):
    hull = []
    for i in range(len(x)):
        while len(hull) >= 2:
            i0, i1 = hull[-2], hull[-1]
            cross = (x[i1] - x[i0]) * (y[i] - y[i0]) - (y[i1] - y[i0]) * (x[i] - x[i0])
            if cross >= 0:
                hull.pop()
            else:
                break
        hull.append(i)
    return hull


def initial_guesses(c, offset=0.7):
    """Starting points spread over circles from the Newton polygon of ``log|c_k|``.

    Each edge of the upper convex hull of ``(k, log|c_k|)`` from ``i`` to
    ``j`` contributes ``j - i`` points on the circle of radius
    ``(|c_i| / |c_j|)^(1/(j - i))``.
    """
    n = len(c) - 1
    keep = np.nonzero(c != 0)[0]
    logc = np.log(np.abs(c[keep]))
    hull = [keep[h] for h in _upper_hull(keep.astype(float), logc)]
    lc = dict(zip(keep, logc))
    guesses = []
    for i, j in zip(hull[:-1], hull[1:]):
        m = j - i
        radius = math.exp((lc[i] - lc[j]) / m)
        ang = 2.0 * math.pi * np.arange(m) / m + 2.0 * math.pi * i / n + offset
        guesses.append(radius * np.exp(1j * ang))
    return np.concatenate(guesses)


def aberth(c, max_sweeps=500):
    """Aberth-Ehrlich simultaneous iteration on ascending coefficients ``c``.

    ``c[0]`` and ``c[-1]`` must be non-zero.  Returns ``(roots, backward_errors)``.
    """
    n = len(c) - 1
    z = initial_guesses(c)
    active = np.ones(n, dtype=bool)
    stop = 4.0 * n * _EPS
    for _ in range(max_sweeps):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        corr, berr = _newton_and_backward_error(c, z[idx])
        diff = z[idx, None] - z[None, :]
        diff[np.arange(idx.size), idx] = 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            s = np.sum(1.0 / diff, axis=1) - 1.0
            step = corr / (1.0 - corr * s)
        step = np.where(np.isfinite(step), step, corr)
        done = (berr <= stop) | (np.abs(step) <= _EPS * np.abs(z[idx]))
        z[idx] = np.where(done, z[idx], z[idx] - step)
        active[idx[done]] = False
    _, berr = _newton_and_backward_error(c, z)
    return z, berr


def _companion_roots(c):
    n = len(c) - 1
    comp = np.zeros((n, n), dtype=complex)
    comp[1:, :-1] = np.eye(n - 1)
    comp[:, -1] = -c[:-1] / c[-1]
    z = np.linalg.eigvals(comp)
    _, berr = _newton_and_backward_error(c, z)
    return z, berr


def polynomial_roots(p, residual_tol=RESIDUAL_TOL):
    """All ``N`` roots of ``p`` with multiplicity, in no particular order.

    Aberth-Ehrlich iteration first; companion-matrix eigenvalues as a fallback
    for ``N <= 64``.  Every root must have relative backward error
    ``|p(z)| / sum_k |c_k| |z|^k`` (reversed form when ``|z| > 1``) at most
    ``residual_tol``.

    Raises
    ------
    RootFindingFailure
    """
    c = p.coefficients
    nz = int(np.argmax(c != 0))  # roots at the origin
    c = c[nz:]
    n = len(c) - 1
    if n == 0:
        return np.zeros(nz, dtype=complex)
    if n == 1:
        return np.concatenate([np.zeros(nz, dtype=complex), [-c[0] / c[1]]])

    z, berr = aberth(c)
    if not np.all(berr <= residual_tol):
        if n > COMPANION_MAX_DEGREE:
            raise RootFindingFailure(
                f"Aberth iteration left backward error {np.nanmax(berr):.3g} at degree {n}"
            )
        z, berr = _companion_roots(c)
        if not np.all(berr <= residual_tol):
            raise RootFindingFailure(f"backward error {np.nanmax(berr):.3g} at degree {n}")
    return np.concatenate([np.zeros(nz, dtype=complex), z])
