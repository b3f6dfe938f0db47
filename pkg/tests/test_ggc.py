import math

import numpy as np
import pytest
from scipy import integrate

from mlstable import ggc, mlfun, stable
from mlstable.streams import stream

SPEC = ggc.GgcSpec(math.cos(math.pi * 0.3), 0.6)


def test_spec_derived_fields():
    assert SPEC.alpha == pytest.approx(0.3, rel=1e-13)
    assert SPEC.thorin
    assert not ggc.GgcSpec(0.0, 0.6).thorin
    assert ggc.GgcSpec(0.0, 0.45).thorin


def test_laplace_closed_form():
    lam = 1.7
    want = 1.0 / (1.0 + 2.0 * SPEC.c * lam ** SPEC.t + lam ** (2.0 * SPEC.t))
    assert ggc.laplace_X(SPEC, lam) == pytest.approx(want, rel=1e-13)
    assert ggc.laplace_X(SPEC, lam) == pytest.approx(math.exp(-ggc.phi(SPEC, lam)), rel=1e-13)


def test_phi_prime_matches_difference():
    h = 1e-7
    for lam in (0.3, 2.0):
        num = (ggc.phi(SPEC, lam + h) - ggc.phi(SPEC, lam - h)) / (2.0 * h)
        assert ggc.phi_prime(SPEC, lam) == pytest.approx(float(num), rel=1e-6)


def test_density_integrates_to_laplace():
    for lam in (0.8, 3.0):
        q, _ = integrate.quad(
            lambda x: math.exp(-lam * x) * ggc.density_X(SPEC, x), 0.0, np.inf, limit=300
        )
        assert q == pytest.approx(ggc.laplace_X(SPEC, lam), abs=1e-6)


def test_cdf_is_antiderivative():
    h = 1e-6
    for x in (0.3, 1.2, 4.0):
        num = (ggc.cdf_X(SPEC, x + h) - ggc.cdf_X(SPEC, x - h)) / (2.0 * h)
        assert num == pytest.approx(ggc.density_X(SPEC, x), rel=1e-5)


def test_cdf_limits():
    assert ggc.cdf_X(SPEC, 1e-8) == pytest.approx(0.0, abs=1e-6)
    # the tail decays like x^(-t), so convergence to 1 is only algebraic
    assert ggc.cdf_X(SPEC, 1e6) == pytest.approx(1.0, abs=5e-4)
    assert ggc.cdf_X(SPEC, 1e6) < 1.0


def test_mellin_X_closed_value_and_symmetric_domain():
    t, alpha = SPEC.t, SPEC.alpha
    want = math.pi * alpha / (math.sin(math.pi * alpha) * math.gamma(1.0 + t))
    assert ggc.mellin_X(SPEC, t) == pytest.approx(want, rel=1e-13)
    with pytest.raises(ValueError):
        ggc.mellin_X(SPEC, 2.0 * t + 0.01)


def test_mellin_X_against_quadrature():
    for s in (0.2, -0.3):
        q, _ = integrate.quad(
            lambda x: x ** (-s) * ggc.density_X(SPEC, x), 0.0, np.inf, limit=300
        )
        assert q == pytest.approx(ggc.mellin_X(SPEC, s), rel=1e-6)


def test_mellin_D_biased_even_and_identity():
    for s in (0.1, 0.33):
        assert ggc.mellin_D_biased(SPEC, s) == pytest.approx(
            ggc.mellin_D_biased(SPEC, -s), rel=1e-13
        )
        lhs = stable.mellin_T(SPEC.alpha, s / SPEC.t)
        rhs = (
            math.gamma(SPEC.t + s) * math.gamma(SPEC.t - s) / math.gamma(SPEC.t) ** 2
            * ggc.mellin_D_biased(SPEC, s)
        )
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_eta_closed_maximum():
    for spec in (ggc.GgcSpec(0.2, 0.85), ggc.GgcSpec(0.5, 0.85)):
        peak = float(ggc.eta(spec, np.array([1.0]))[0])
        assert peak == pytest.approx(ggc.eta_max(spec), rel=1e-13)
        assert peak > 1.0


def test_eta_c_zero_is_flat():
    u = np.geomspace(0.01, 100.0, 30)
    e = ggc.eta(ggc.GgcSpec(0.0, 0.45), u)
    assert np.allclose(e, 0.9, rtol=1e-12)


def test_sampler_quantiles():
    g = stream(11, "test:sample-X")
    x = ggc.sample_X(SPEC, g, 400)
    for q in (0.25, 0.5, 0.75):
        emp = float(np.quantile(x, q))
        assert abs(ggc.cdf_X(SPEC, emp) - q) < 4.0 * math.sqrt(0.25 / x.size)


def test_duplication_preserves_negative_moment():
    g = stream(12, "test:sample-X-dup")
    x = ggc.sample_X_duplicated(SPEC, 0.9, g, 4000)
    v = x ** (-0.3)
    se = np.std(v) / math.sqrt(v.size)
    assert abs(np.mean(v) - ggc.mellin_X(SPEC, 0.3)) < 4.0 * se


def test_tau1_laplace_small_sample():
    g = stream(13, "test:tau1")
    for alpha in (1.25, 2.0):
        tau = ggc.sample_tau1(alpha, g, 200_000)
        for lam in (0.7, 1.5):
            v = np.exp(-lam * tau)
            se = np.std(v) / math.sqrt(v.size) + 1e-12
            assert abs(np.mean(v) - ggc.laplace_tau1(alpha, lam)) < 4.0 * se


def test_shifted_variable_laplace():
    g = stream(14, "test:R")
    alpha = 0.75
    r = ggc.sample_R(alpha, g, 200_000)
    assert np.all(r >= 1.0)
    v = np.exp(-r)
    se = np.std(v) / math.sqrt(v.size)
    want = math.exp(-1.0) * mlfun.f_alpha(alpha, 1.0)
    assert abs(np.mean(v) - want) < 4.0 * se


def test_boundary_density_matches_continuous_limit():
    near1 = ggc.GgcSpec(math.cos(math.pi * 1e-4), 0.6)
    for y in (0.5, 2.0):
        assert ggc.density_X_boundary_c1(0.6, y) == pytest.approx(
            ggc.density_X(near1, y), rel=1e-6
        )
