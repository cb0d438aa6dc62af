import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from riemann_energy.exceptions import CoincidentPoints
from riemann_energy.kernels import (
    AREA_S_HALF,
    C_HALF,
    CONSTANTS,
    F_HALF,
    KernelKind,
    convert_green_to_log_chordal,
    green_kernel,
    log_chordal_kernel,
)
from riemann_energy.sphere_geometry import INF, chordal_distance, sphere_to_plane

coord = st.floats(min_value=-1e4, max_value=1e4, allow_nan=False)
points = st.builds(complex, coord, coord)


def test_constants():
    assert CONSTANTS.C_half == -CONSTANTS.F_half
    assert C_HALF == pytest.approx(0.0795774715459477, abs=1e-16)
    assert abs(AREA_S_HALF - math.pi) <= 1e-15
    assert len(KernelKind) == 2


def test_log_chordal_examples():
    assert log_chordal_kernel(0, INF) == pytest.approx(0.0, abs=1e-15)
    assert log_chordal_kernel(0, 1) == pytest.approx(0.5 * math.log(2), abs=1e-15)
    with pytest.raises(CoincidentPoints):
        log_chordal_kernel(1, 1)


def test_green_examples():
    assert green_kernel(0, INF) == pytest.approx(-1 / (4 * math.pi), abs=1e-15)
    assert green_kernel(0, 1) == pytest.approx((math.log(2) - 1) / (4 * math.pi), abs=1e-15)
    with pytest.raises(CoincidentPoints):
        green_kernel(1, 1)


@pytest.mark.parametrize(
    "g, expected",
    [(-1 / (4 * math.pi), 0.0), ((math.log(2) - 1) / (4 * math.pi), 0.5 * math.log(2)), (0.0, 0.5)],
)
def test_conversion_examples(g, expected):
    assert convert_green_to_log_chordal(g) == pytest.approx(expected, abs=1e-15)


@given(points, points)
def test_affine_relation_and_symmetry(z, w):
    assume(chordal_distance(z, w) > 1e-12)
    lc = log_chordal_kernel(z, w)
    g = green_kernel(z, w)
    assert lc >= 0
    assert abs(convert_green_to_log_chordal(g) - lc) <= 1e-14 * max(1.0, lc)
    assert g == green_kernel(w, z)
    assert lc == log_chordal_kernel(w, z)


def test_green_minimum_at_antipodes(rng):
    z = sphere_to_plane(np.array([0.3, -0.2, 0.5 + math.sqrt(0.25 - 0.13)]))
    antipode = -1.0 / np.conj(z)
    assert green_kernel(z, antipode) == pytest.approx(F_HALF, abs=1e-15)
    w = rng.standard_normal(1000) + 1j * rng.standard_normal(1000)
    assert np.all(green_kernel(z, w) >= F_HALF - 1e-15)
