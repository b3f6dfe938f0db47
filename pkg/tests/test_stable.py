import math

import numpy as np
import pytest

from mlstable import stable
from mlstable.streams import stream


def test_mellin_stable_formula():
    # E[S_a^{-s}] = Gamma(1 + s/a) / Gamma(1 + s)
    assert stable.mellin_stable(0.5, 1.0) == pytest.approx(2.0, rel=1e-13)
    assert stable.mellin_stable(0.5, 2.0) == pytest.approx(12.0, rel=1e-13)


def test_kanter_sampler_moments():
    g = stream(3, "test:kanter")
    s = stable.sample_stable(0.7, g, 400_000)
    for m in (0.4, 1.0, 1.8):
        est = np.mean(s ** (-m))
        se = np.std(s ** (-m)) / math.sqrt(s.size)
        assert abs(est - stable.mellin_stable(0.7, m)) < 4.0 * se


def test_kanter_sampler_laplace():
    g = stream(4, "test:kanter-laplace")
    s = stable.sample_stable(0.4, g, 400_000)
    for lam in (0.5, 2.0):
        v = np.exp(-lam * s)
        se = np.std(v) / math.sqrt(s.size)
        assert abs(np.mean(v) - math.exp(-(lam ** 0.4))) < 4.0 * se


def test_half_stable_cdf_and_density():
    # S_{1/2} has distribution function erfc(1/(2 sqrt(x)))
    assert stable.cdf_stable_half(0.25) == pytest.approx(math.erfc(1.0), rel=1e-13)
    h = 1e-6
    for x in (0.2, 1.0, 5.0):
        num = (stable.cdf_stable_half(x + h) - stable.cdf_stable_half(x - h)) / (2.0 * h)
        assert stable.density_stable_half(x) == pytest.approx(num, rel=1e-7)


def test_cdf_T_matches_density():
    h = 1e-6
    for alpha in (0.3, 0.7):
        for x in (0.4, 1.0, 3.0):
            num = (stable.cdf_T(alpha, x + h) - stable.cdf_T(alpha, x - h)) / (2.0 * h)
            want = math.sin(math.pi * alpha) / (
                math.pi * alpha * (x * x + 2.0 * math.cos(math.pi * alpha) * x + 1.0)
            )
            assert num == pytest.approx(want, rel=1e-6)


def test_cdf_T_range_and_symmetry():
    for alpha in (0.2, 0.8):
        assert stable.cdf_T(alpha, 1e-12) == pytest.approx(0.0, abs=1e-10)
        assert stable.cdf_T(alpha, 1e12) == pytest.approx(1.0, abs=1e-10)
        # T and 1/T share the same law
        for x in (0.3, 2.0):
            assert stable.cdf_T(alpha, x) == pytest.approx(
                1.0 - stable.cdf_T(alpha, 1.0 / x), rel=1e-10
            )


def test_sample_T_inverse_cdf():
    g = stream(5, "test:sample-T")
    alpha = 0.6
    x = stable.sample_T(alpha, 1.0, g, 200_000)
    for q in (0.2, 1.0, 4.0):
        emp = np.mean(x <= q)
        assert abs(emp - stable.cdf_T(alpha, q)) < 4.0 * math.sqrt(0.25 / x.size)


def test_mellin_T_formula():
    for alpha in (0.3, 0.7):
        for s in (0.2, 0.5, -0.4):
            want = (
                math.gamma(1.0 - s) * math.gamma(1.0 + s)
                / (math.gamma(1.0 - alpha * s) * math.gamma(1.0 + alpha * s))
            )
            assert stable.mellin_T(alpha, s) == pytest.approx(want, rel=1e-13)


def test_sample_T_against_mellin():
    g = stream(6, "test:T-moment")
    alpha = 0.45
    x = stable.sample_T(alpha, 1.0, g, 300_000)
    for s in (0.3, -0.3):
        v = x ** s
        se = np.std(v) / math.sqrt(v.size)
        assert abs(np.mean(v) - stable.mellin_T(alpha, s)) < 4.0 * se


def test_size_biased_sampler_matches_biased_mellin():
    g = stream(7, "test:T-biased")
    alpha, t, u = 0.5, 1.5, -1.0
    v = stable.sample_T_biased(alpha, t, u, g, 300_000)
    for s in (0.4, -0.25):
        w = v ** s
        se = np.std(w) / math.sqrt(w.size)
        assert abs(np.mean(w) - stable.mellin_T_biased(alpha, t, u, s)) < 4.0 * se


def test_degenerate_indices():
    g = stream(8, "test:degenerate")
    assert np.all(stable.sample_T(1.0, 2.0, g, 5) == 1.0)
    ratio = stable.sample_T(0.0, 1.0, g, 100_000)
    # at index zero the law degenerates to a quotient of unit exponentials
    emp = np.mean(ratio <= 1.0)
    assert abs(emp - 0.5) < 4.0 * math.sqrt(0.25 / ratio.size)
