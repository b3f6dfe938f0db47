import math

import numpy as np
import pytest

from mlstable import certify
from mlstable.certify import AnalyticFn


def test_cm_accepts_known_laplace_transforms():
    for f in (
        lambda x: math.exp(-x),
        lambda x: 1.0 / (1.0 + x),
        lambda x: x ** (-0.5),
    ):
        v = certify.cm_check(AnalyticFn(f))
        assert v.verdict == "consistent"


def test_cm_rejects_cosine_modulation():
    # exp(-x) cos(3x) is smooth and positive near 0 but not a Laplace
    # transform of a positive measure; the sign pattern of its differences
    # gives it away quickly
    v = certify.cm_check(
        AnalyticFn(lambda x: math.exp(-x) * math.cos(3.0 * x)),
        screen=False,
    )
    assert v.verdict == "violated"
    assert v.witness is not None


def test_cm_growth_screen_catches_oscillation():
    # exp(-x)(1 + 0.5 sin x) decays and alternates too slowly for low-order
    # differences, but its analytic extension grows off the real axis
    v = certify.cm_check(
        AnalyticFn(
            lambda x: math.exp(-x) * (1.0 + 0.5 * math.sin(x)),
            complex_evaluator=lambda z: np.exp(-z) * (1.0 + 0.5 * np.sin(z)),
        )
    )
    assert v.verdict == "violated"


def test_hcm_accepts_power_and_exponential():
    for f in (
        lambda x: x ** 0.3,
        lambda x: 1.0 / (1.0 + x),
        lambda x: math.exp(-x - 1.0 / x),
    ):
        v = certify.hcm_check(AnalyticFn(f), probe=False)
        assert v.verdict == "consistent"


def test_hcm_rejects_shifted_gaussian():
    # exp(-(log x)^4) is multiplicatively symmetric but decays too fast
    v = certify.hcm_check(
        AnalyticFn(lambda x: math.exp(-math.log(x) ** 4)), probe=False
    )
    assert v.verdict == "violated"


def test_bernstein_accepts_and_rejects():
    ok = certify.bernstein_check(
        AnalyticFn(lambda x: math.log1p(x)),
        AnalyticFn(lambda x: 1.0 / (1.0 + x)),
    )
    assert ok.verdict == "consistent"
    bad = certify.bernstein_check(
        AnalyticFn(lambda x: x * x),
        AnalyticFn(lambda x: 2.0 * x),
    )
    assert bad.verdict == "violated"


def test_stieltjes_sign():
    ok = certify.stieltjes_sign_check(lambda z: 1.0 / (1.0 + z))
    assert ok.verdict == "consistent"
    bad = certify.stieltjes_sign_check(lambda z: 1.0 / (1.0 + z) ** 2)
    assert bad.verdict == "violated"
    assert bad.witness is not None


def test_thorin_mass_estimate_on_gamma_density():
    t = 0.7
    c = 1.0 / math.gamma(t)
    est = certify.thorin_mass_estimate(lambda x: c * x ** (t - 1.0) * math.exp(-x))
    assert est == pytest.approx(t, abs=1e-3)


def test_thorin_mass_estimate_rejects_bad_density():
    with pytest.raises(ArithmeticError):
        certify.thorin_mass_estimate(lambda x: math.sin(1.0 / x) + 2.0)
