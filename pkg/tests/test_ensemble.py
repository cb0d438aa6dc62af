import math

import numpy as np
import pytest

from riemann_energy import ensemble
from riemann_energy.ensemble import (
    KostlanPolynomial,
    evaluate,
    log_binomial,
    polynomial_roots,
    sample_kostlan,
)
from riemann_energy.exceptions import DegreeOutOfRange, RootFindingFailure
from riemann_energy.sphere_geometry import chordal_distance, plane_to_sphere


def reconstruction_error(p, roots):
    """Coefficient-wise error of ``c_N prod (z - r_i)``, relative to max |c_k|."""
    expanded = np.poly(roots)[::-1] * p.coefficients[-1]
    return np.max(np.abs(expanded - p.coefficients)) / np.max(np.abs(p.coefficients))


def test_log_binomial_matches_integers():
    for n in (1, 5, 30, 60):
        for k in range(n + 1):
            assert log_binomial(n, k) == pytest.approx(math.log(math.comb(n, k)), abs=1e-12)


def test_degree_one_coefficients():
    p = sample_kostlan(1, 3)
    assert p.coefficients.shape == (2,)
    g = np.random.default_rng(3).standard_normal((2, 2)) * math.sqrt(0.5)
    np.testing.assert_allclose(p.unscaled_coefficients(), g[:, 0] + 1j * g[:, 1], rtol=1e-15)


def test_deterministic():
    a, b = sample_kostlan(3, 99), sample_kostlan(3, 99)
    np.testing.assert_array_equal(a.coefficients, b.coefficients)
    assert a.scale_exponent == b.scale_exponent
    np.testing.assert_array_equal(polynomial_roots(a), polynomial_roots(b))


@pytest.mark.parametrize("N", [100, 2000])
def test_large_degree_finite_and_scaled(N):
    p = sample_kostlan(N, 1)
    assert np.all(np.isfinite(p.coefficients))
    assert 2.0**-10 <= np.max(np.abs(p.coefficients)) <= 2.0**10


def test_coefficient_variances():
    # E |c_k|^2 = C(N, k); averaged over draws the ratio should be ~1
    N, M = 12, 4000
    ratios = np.array(
        [np.abs(sample_kostlan(N, [5, s]).unscaled_coefficients()) ** 2 for s in range(M)]
    ) / np.exp(log_binomial(N, np.arange(N + 1)))
    assert np.all(np.abs(ratios.mean(axis=0) - 1.0) <= 5 / math.sqrt(M))


@pytest.mark.parametrize("N", [0, 2001, 2.5])
def test_degree_out_of_range(N):
    with pytest.raises(DegreeOutOfRange):
        sample_kostlan(N, 0)


def test_root_examples():
    r = polynomial_roots(KostlanPolynomial.from_coefficients([-1, 0, 1]))
    np.testing.assert_allclose(np.sort_complex(r), [-1, 1], atol=1e-15)
    assert polynomial_roots(KostlanPolynomial.from_coefficients([0, 1])) == [0]
    r = polynomial_roots(KostlanPolynomial.from_coefficients([0, 0, 2, 1]))
    np.testing.assert_allclose(np.sort_complex(r), [-2, 0, 0], atol=1e-15)


def test_evaluate_examples():
    assert evaluate(KostlanPolynomial.from_coefficients([-1, 0, 1]), 2) == 3
    assert evaluate(KostlanPolynomial.from_coefficients([0, 1]), 0) == 0


def test_evaluate_honours_scale():
    p = sample_kostlan(30, 4)
    z = np.array([0.3 + 0.1j, -2.0])
    direct = np.polyval(p.unscaled_coefficients()[::-1], z)
    np.testing.assert_allclose(evaluate(p, z), direct, rtol=1e-12)


@pytest.mark.parametrize("N", [5, 20, 50])
def test_reconstruction_and_residual(N):
    for s in range(20):
        p = sample_kostlan(N, [11, N, s])
        roots = polynomial_roots(p)
        assert len(roots) == N
        assert reconstruction_error(p, roots) <= 1e-8
        scale = np.max(np.abs(p.unscaled_coefficients()))
        assert np.all(np.abs(evaluate(p, roots)) <= 1e-8 * scale * (1 + np.abs(roots)) ** N)


def test_reconstruction_oracle_in_high_precision():
    # the double-precision expansion used above agrees with an exact-ish expansion
    mpmath = pytest.importorskip("mpmath")
    p = sample_kostlan(50, 8)
    roots = polynomial_roots(p)
    with mpmath.workdps(40):
        c = [mpmath.mpc(1)]
        for r in roots:
            c = [mpmath.mpc(0)] + c
            for k in range(len(c) - 1):
                c[k] -= mpmath.mpc(r) * c[k + 1]
        err = max(abs(p.coefficients[-1] * ck - complex(pk)) for ck, pk in zip(c, p.coefficients))
    assert float(err) / np.max(np.abs(p.coefficients)) <= 1e-8


def test_roots_invariant_under_scaling():
    p = sample_kostlan(15, 2)
    q = KostlanPolynomial(p.degree, p.coefficients * (3 - 4j), p.scale_exponent + 7)
    a, b = polynomial_roots(p), polynomial_roots(q)
    d = chordal_distance(np.sort_complex(a)[:, None], np.sort_complex(b)[None, :])
    assert np.all(d.min(axis=1) <= 1e-12)


def test_high_degree_roots():
    p = sample_kostlan(500, 6)
    roots = polynomial_roots(p)
    assert len(roots) == 500


def test_companion_fallback(monkeypatch):
    p = sample_kostlan(10, 0)
    good = polynomial_roots(p)
    monkeypatch.setattr(ensemble, "aberth", lambda c: (np.zeros(len(c) - 1, complex), np.ones(len(c) - 1)))
    roots = polynomial_roots(p)
    assert reconstruction_error(p, roots) <= 1e-8
    d = chordal_distance(good[:, None], roots[None, :])
    assert np.all(d.min(axis=1) <= 1e-10)


def test_failure_without_fallback(monkeypatch):
    p = sample_kostlan(70, 0)
    monkeypatch.setattr(ensemble, "aberth", lambda c: (np.zeros(len(c) - 1, complex), np.ones(len(c) - 1)))
    with pytest.raises(RootFindingFailure):
        polynomial_roots(p)


def test_degree_one_zero_is_uniform():
    M = 10_000
    s = np.array([plane_to_sphere(polynomial_roots(sample_kostlan(1, [21, k]))[0]) for k in range(M)])
    se = s.std(axis=0, ddof=1) / math.sqrt(M)
    assert np.all(np.abs(s.mean(axis=0) - [0.0, 0.0, 0.5]) <= 3 * se)
