import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riemann_energy.energy import EnergyValue, energy_abs, energy_zhong, lemma_conversion
from riemann_energy.ensemble import KostlanPolynomial, polynomial_roots, sample_kostlan
from riemann_energy.exceptions import CoincidentPoints
from riemann_energy.kernels import C_HALF, KernelKind, log_chordal_kernel
from riemann_energy.sphere_geometry import INF, mobius_rotation, random_rotation, uniform_sphere_points


def brute_force_abs(points):
    return sum(
        float(log_chordal_kernel(points[i], points[j]))
        for i in range(len(points))
        for j in range(i + 1, len(points))
    )


def test_abs_examples():
    assert energy_abs([0, INF]).value == pytest.approx(0.0, abs=1e-15)
    assert energy_abs([0, 1]).value == pytest.approx(0.5 * math.log(2), abs=1e-15)
    e = energy_abs([0, 1, INF])
    assert e.value == pytest.approx(math.log(2), abs=1e-15)
    assert e.kind is KernelKind.LogChordalABS and e.n_points == 3


def test_zhong_examples():
    assert energy_zhong([0, INF]).value == pytest.approx(-1 / (2 * math.pi), abs=1e-15)
    assert energy_zhong([0, 1]).value == pytest.approx(2 * (math.log(2) - 1) / (4 * math.pi), abs=1e-15)
    e = energy_zhong([1 + 2j])
    assert e.value == 0 and e.kind is KernelKind.GreenZhong


def test_conversion_examples():
    assert lemma_conversion(energy_zhong([0, INF])).value == pytest.approx(0.0, abs=1e-15)
    assert lemma_conversion(EnergyValue(KernelKind.GreenZhong, 0.0, 1), 1).value == 0.0
    with pytest.raises(ValueError):
        lemma_conversion(energy_abs([0, 1]))
    with pytest.raises(ValueError):
        lemma_conversion(energy_zhong([0, 1]), 3)


def test_coincident_pair_reported():
    with pytest.raises(CoincidentPoints) as info:
        energy_abs([0, 1, 2, 1 + 1e-16])
    assert info.value.pair == (1, 3)


def test_matches_brute_force(rng):
    pts = uniform_sphere_points(12, rng)
    assert energy_abs(pts).value == pytest.approx(brute_force_abs(pts), rel=1e-13)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 60), st.integers(0, 2**32 - 1))
def test_identity_per_configuration(n, seed):
    pts = uniform_sphere_points(n, np.random.default_rng(seed))
    e_abs = energy_abs(pts).value
    converted = lemma_conversion(energy_zhong(pts), n).value
    assert abs(converted - e_abs) <= 1e-10 * (1 + abs(e_abs))
    assert e_abs >= 0


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 30), st.integers(0, 2**32 - 1))
def test_rotation_invariance(n, seed):
    rng = np.random.default_rng(seed)
    pts = uniform_sphere_points(n, rng)
    a, b = random_rotation(rng)
    rotated = mobius_rotation(pts, a, b)
    assert energy_abs(rotated).value == pytest.approx(energy_abs(pts).value, abs=1e-9)
    assert energy_zhong(rotated).value == pytest.approx(energy_zhong(pts).value, abs=1e-9)


def test_polynomial_scaling_leaves_energy():
    p = sample_kostlan(20, 5)
    q = KostlanPolynomial(p.degree, p.coefficients * (0.2 + 1.5j), p.scale_exponent - 40)
    assert energy_abs(polynomial_roots(q)).value == pytest.approx(energy_abs(polynomial_roots(p)).value, abs=1e-9)
