import cmath
import math

import numpy as np
import pytest
from scipy import special

from mlstable import mlfun


def ml_half_closed(z: complex) -> complex:
    # E_{1/2}(z) = exp(z^2) erfc(-z), valid for all complex z
    import mpmath

    return complex(mpmath.exp(z * z) * mpmath.erfc(-z))


def test_ml_order_one_is_exp():
    for z in np.linspace(-30.0, 30.0, 100):
        assert mlfun.ml_eval(1.0, z) == pytest.approx(math.exp(z), rel=1e-12)


def test_ml_order_two_is_cosh_sqrt():
    assert mlfun.ml_eval(2.0, 2.0 ** 2).real == pytest.approx(3.76219569108363, rel=1e-13)
    for z in np.linspace(0.1, 50.0, 60):
        assert mlfun.ml_eval(2.0, z).real == pytest.approx(math.cosh(math.sqrt(z)), rel=1e-12)
    for z in np.linspace(-50.0, -0.1, 60):
        assert mlfun.ml_eval(2.0, z).real == pytest.approx(math.cos(math.sqrt(-z)), abs=1e-12)


@pytest.mark.parametrize("z", [-8.0, -3.0, -1.0, -0.2, 0.5, 2.0, 1.5 + 2.0j, -4.0 + 1.0j])
def test_ml_half_order_oracle(z):
    got = mlfun.ml_eval(0.5, z)
    want = ml_half_closed(z)
    assert cmath.isclose(got, want, rel_tol=1e-11)


def test_ml_deriv_matches_finite_difference():
    h = 1e-6
    for a in (0.5, 0.7, 1.3):
        for z in (-2.0, 0.7, 3.0):
            num = (mlfun.ml_eval(a, z + h) - mlfun.ml_eval(a, z - h)) / (2.0 * h)
            assert mlfun.ml_deriv(a, z) == pytest.approx(num, rel=1e-7)


def test_ml_large_argument_against_mp_reference():
    # forces the asymptotic branch and checks it against high-precision series
    import mpmath

    for a, z in ((0.6, 40.0), (0.6, -120.0), (0.8, 150.0), (1.5, -300.0)):
        got = mlfun.ml_eval(a, z)
        with mpmath.workdps(120):
            want = complex(mpmath.nsum(lambda k: mpmath.mpf(z) ** k / mpmath.gamma(1 + k * a),
                                       [0, mpmath.inf]))
        assert cmath.isclose(got, want, rel_tol=1e-10, abs_tol=1e-280)


def test_ml_rejects_bad_order():
    for a in (0.0, -0.3, 2.5):
        with pytest.raises(ValueError):
            mlfun.ml_eval(a, 1.0)


def test_ml_overflow_is_clean():
    with pytest.raises(OverflowError):
        mlfun.ml_eval(0.5, 1e5)


def test_f_half_closed_form():
    # F_{1/2}(l) = exp(l) erfc(sqrt(l)) after simplification of the defining ratio
    for lam in (0.25, 1.0, 4.0, 20.0):
        want = math.exp(lam) * special.erfc(math.sqrt(lam))
        assert mlfun.f_alpha(0.5, lam) == pytest.approx(want, rel=1e-11)


def test_f_two_closed_form():
    for lam in (0.3, 1.0, 5.0):
        assert mlfun.f_alpha(2.0, lam) == pytest.approx(math.exp(-lam), rel=1e-13)


def test_f_at_zero_is_one():
    for alpha in (0.3, 0.8, 1.5):
        assert mlfun.f_alpha(alpha, 0.0) == pytest.approx(1.0, abs=1e-14)


def test_f_deriv_matches_finite_difference():
    h = 1e-6
    for alpha in (0.4, 0.75, 1.5):
        for lam in (0.5, 2.0, 10.0):
            num = (mlfun.f_alpha(alpha, lam + h) - mlfun.f_alpha(alpha, lam - h)) / (2.0 * h)
            assert mlfun.f_alpha_deriv(alpha, lam) == pytest.approx(num, rel=1e-6)


def test_f_large_argument_regime_is_smooth():
    # the series and algebraic-expansion regimes must agree where they hand over
    cut = mlfun.F_ASYM_CUT
    for alpha in (0.3, 0.75, 1.25, 1.75):
        lo = mlfun.f_alpha(alpha, cut - 1e-9)
        hi = mlfun.f_alpha(alpha, cut + 1e-9)
        assert hi == pytest.approx(lo, rel=1e-10)


def test_g_half_closed_form():
    for x in (0.3, 1.0, 7.0):
        assert mlfun.g_alpha(0.5, x) == pytest.approx(-1.0 / math.sqrt(math.pi * x), rel=1e-10)


def test_g_two_closed_form():
    for x in (0.2, 1.0, 4.0):
        assert mlfun.g_alpha(2.0, x) == pytest.approx(math.exp(-x), rel=1e-11)


def test_laplace_g_closed_ratio():
    for alpha in (0.6, 1.5):
        for lam in (0.5, 3.0):
            want = (lam ** (alpha - 1.0) - 1.0) / (lam ** alpha - 1.0)
            assert mlfun.laplace_G(alpha, lam) == pytest.approx(want, rel=1e-12)
        # removable point
        assert mlfun.laplace_G(alpha, 1.0) == pytest.approx((alpha - 1.0) / alpha, rel=1e-13)
        near = mlfun.laplace_G(alpha, 1.0 + 1e-9)
        assert near == pytest.approx((alpha - 1.0) / alpha, rel=1e-7)


def test_h_two_closed_form():
    for lam in (0.4, 1.0, 9.0):
        assert mlfun.h_alpha(2.0, lam) == pytest.approx(math.exp(-math.sqrt(lam)), rel=1e-11)


def test_h_deriv_matches_finite_difference():
    h = 1e-7
    for alpha in (1.25, 1.6):
        for lam in (0.5, 2.0):
            num = (mlfun.h_alpha(alpha, lam + h) - mlfun.h_alpha(alpha, lam - h)) / (2.0 * h)
            assert mlfun.h_alpha_deriv(alpha, lam) == pytest.approx(num, rel=1e-6)


def test_frakc_dual_route_agreement():
    worst = 0.0
    for c in (0.0, 0.3, 0.8):
        for t in (0.4, 0.6, 0.9):
            for x in (0.1, 1.0, 3.0, 6.5):
                a = mlfun.frakC(c, t, x, route="auto")
                b = mlfun.frakC(c, t, x, route="series")
                worst = max(worst, abs(a - b) / (abs(a) + 1e-300))
    assert worst < 1e-9


def test_frakc_at_zero_limit():
    for c in (0.2, 0.7):
        assert mlfun.frakC(c, 0.5, 1e-12) == pytest.approx(1.0, abs=1e-6)


def test_log_derivative_targets_at_removable_point():
    assert mlfun.G1_prime(1.5, 1.0).real == pytest.approx(0.5, abs=1e-12)
    for alpha in (0.3, 0.75):
        assert mlfun.G2_prime(alpha, 1.0).real == pytest.approx(alpha - 0.5, abs=1e-12)
