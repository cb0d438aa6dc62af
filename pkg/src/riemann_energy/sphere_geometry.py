"""Geometry of the Riemann sphere realised as S(1/2).

S(1/2) is the sphere of radius 1/2 centred at (0, 0, 1/2).  Stereographic
projection from the north pole (0, 0, 1) identifies it with the extended
complex plane; 0 goes to the south pole (the origin of R^3) and infinity to
the north pole.

Points of the extended plane are plain Python/numpy complex numbers.  The
point at infinity is any complex value with an infinite component; use
:data:`INF` to construct it.  NaN components are rejected.

Sphere points are arrays whose last axis has length 3.
"""

import numpy as np

INF = complex(np.inf, 0.0)

#: Tolerance of the ``x^2 + y^2 + (z - 1/2)^2 = 1/4`` membership test.
SPHERE_TOL = 1e-12


def is_infinite(z):
    """True where ``z`` is the point at infinity."""
    z = np.asarray(z, dtype=complex)
    return np.isinf(z.real) | np.isinf(z.imag)


def _as_points(z):
    z = np.asarray(z, dtype=complex)
    if np.isnan(z.real).any() or np.isnan(z.imag).any():
        raise ValueError("extended complex points must not contain NaN")
    return z


def plane_to_sphere(z):
    """Stereographic image of ``z`` on S(1/2).

    A finite ``z = x + iy`` maps to ``(x, y, |z|^2) / (1 + |z|^2)`` and
    infinity to ``(0, 0, 1)``.  For ``|z| > 1`` the image is evaluated through
    ``u = 1/z``, which keeps every coordinate accurate up to ``|z| = inf``.

    Parameters
    ----------
    z : complex or array_like of complex

    Returns
    -------
    ndarray, shape ``np.shape(z) + (3,)``
    """
    z = _as_points(z)
    inf = is_infinite(z)
    big = (np.abs(z) > 1.0) | inf
    with np.errstate(divide="ignore", invalid="ignore"):
        u = np.where(big, 1.0 / np.where(big, z, 1.0), 0.0)
    u = np.where(inf, 0.0, u)

    zz = np.where(big, 0.0, z)
    r2 = zz.real**2 + zz.imag**2
    u2 = u.real**2 + u.imag**2

    xy = np.where(big, np.conj(u) / (1.0 + u2), zz / (1.0 + r2))
    height = np.where(big, 1.0 / (1.0 + u2), r2 / (1.0 + r2))
    return np.stack([xy.real, xy.imag, height], axis=-1)


def sphere_to_plane(s):
    """Inverse of :func:`plane_to_sphere`.

    Uses ``(x + iy) / (1 - h)`` on the southern hemisphere and the equivalent
    ``h / (x - iy)`` on the northern one (``x^2 + y^2 = h (1 - h)`` on the
    sphere), so neither pole loses precision.  The north pole maps to
    :data:`INF`.
    """
    s = np.asarray(s, dtype=float)
    x, y, h = s[..., 0], s[..., 1], s[..., 2]
    south = h <= 0.5
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        lower = (x + 1j * y) / (1.0 - h)
        upper = h / (x - 1j * y)
    out = np.where(south, lower, upper)
    pole = ~south & (x == 0.0) & (y == 0.0)
    out = np.where(pole, INF, out)
    return out[()] if out.ndim == 0 else out


def on_sphere(s, tol=SPHERE_TOL):
    """Check the S(1/2) membership invariant for every point in ``s``."""
    s = np.asarray(s, dtype=float)
    resid = s[..., 0] ** 2 + s[..., 1] ** 2 + (s[..., 2] - 0.5) ** 2 - 0.25
    return bool(np.all(np.abs(resid) <= tol))


def chordal_distance(z, w):
    """Chordal distance ``[z, w]`` on the Riemann sphere.

    Evaluated as the Euclidean length of the chord between the images on
    S(1/2); this equals ``|z - w| / (sqrt(1 + |z|^2) sqrt(1 + |w|^2))`` and
    stays finite and accurate when either argument is huge or infinite.
    Broadcasts over array arguments.  The result lies in ``[0, 1]``.
    """
    d = np.linalg.norm(plane_to_sphere(z) - plane_to_sphere(w), axis=-1)
    d = np.minimum(d, 1.0)
    return d[()] if d.ndim == 0 else d


def affine_chordal_distance(z, w):
    """Chordal distance from the affine formula; finite arguments only.

    Cross-check for :func:`chordal_distance`.  Overflows for ``|z|`` beyond
    about ``1e154``.
    """
    z = _as_points(z)
    w = _as_points(w)
    return np.abs(z - w) / (np.hypot(1.0, np.abs(z)) * np.hypot(1.0, np.abs(w)))


def geodesic_distance(z, w):
    """Arc length between ``z`` and ``w`` on S(1/2), in ``[0, pi/2]``.

    On a sphere of radius 1/2 the chord and arc satisfy ``[z, w] = sin(r)``.
    """
    return np.arcsin(np.clip(chordal_distance(z, w), -1.0, 1.0))


def mobius_rotation(z, a, b):
    """Apply the rotation ``z -> (a z + b) / (-conj(b) z + conj(a))``.

    ``a`` and ``b`` must satisfy ``|a|^2 + |b|^2 = 1``; every such map is a
    rigid rotation of S(1/2), hence preserves chordal distance.
    """
    z = _as_points(z)
    inf = is_infinite(z)
    zf = np.where(inf, 0.0, z)
    num = a * zf + b
    den = -np.conj(b) * zf + np.conj(a)
    with np.errstate(divide="ignore", invalid="ignore"):
        finite_img = np.where(den == 0, INF, num / np.where(den == 0, 1.0, den))
        # image of infinity is a / (-conj(b))
        inf_img = INF if b == 0 else a / (-np.conj(b))
    out = np.where(inf, inf_img, finite_img)
    return out[()] if out.ndim == 0 else out


def rotation_to(z):
    """Coefficients ``(a, b)`` of a rotation taking 0 to ``z``."""
    if is_infinite(z):
        return 0.0 + 0.0j, 1.0 + 0.0j
    z = complex(z)
    norm = np.hypot(1.0, abs(z))
    return 1.0 / norm + 0.0j, z / norm


def random_rotation(rng):
    """Haar-random rotation coefficients ``(a, b)``."""
    v = rng.standard_normal(4)
    v /= np.linalg.norm(v)
    return complex(v[0], v[1]), complex(v[2], v[3])


def point_at_distance(z, r, angle=0.0):
    """A point at geodesic distance ``r`` from ``z``.

    ``angle`` selects the direction of departure.  Built as the image of
    ``tan(r) e^{i angle}`` (which lies at distance ``r`` from 0) under a
    rotation taking 0 to ``z``.
    """
    a, b = rotation_to(z)
    u = np.tan(np.asarray(r, dtype=float)) * np.exp(1j * np.asarray(angle, dtype=float))
    return mobius_rotation(u, a, b)


def uniform_sphere_points(n, rng):
    """``n`` independent uniform points of S(1/2), returned in the plane."""
    g = rng.standard_normal((n, 3))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    s = 0.5 * g
    s[:, 2] += 0.5
    return np.atleast_1d(sphere_to_plane(s))
