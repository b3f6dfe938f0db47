"""Monte Carlo and analytic verification suites.

Each suite turns one family of distributional identities into a list of
named checks.  A check records an estimate, an independent reference, a
tolerance, and a pass flag; control checks invert the logic (they pass when
a deliberately wrong reference is detected as wrong), so a fully green
report means every identity held and every control tripped.

Determinism: every random draw uses stream(seed, "SUITE:check-id"), so the
same (suite, n, seed) triple yields a byte-identical canonical report no
matter the execution order or worker count.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import certify, ggc, mlfun, stable, targets
from .streams import stream


@dataclass
class CheckResult:
    id: str
    anchor: str
    estimate: float
    reference: float
    tol: float
    passed: bool

    def __post_init__(self):
        if not self.anchor:
            raise ValueError("every check needs a non-empty anchor")

    def to_dict(self):
        return {
            "id": self.id,
            "anchor": self.anchor,
            "estimate": self.estimate,
            "reference": self.reference,
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    suite: str
    seed: int
    n: int
    checks: list
    runtime_ms: float = 0.0

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, canonical: bool = False):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "n": self.n,
            "checks": [c.to_dict() for c in self.checks],
            "runtime_ms": 0.0 if canonical else self.runtime_ms,
        }

    def to_json(self, canonical: bool = False) -> str:
        return json.dumps(self.to_dict(canonical), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["suite", "seed", "n", "id", "anchor", "estimate", "reference", "tol", "pass"])
        for c in self.checks:
            w.writerow(
                [self.suite, self.seed, self.n, c.id, c.anchor,
                 repr(c.estimate), repr(c.reference), repr(c.tol), c.passed]
            )
        return buf.getvalue()


# ---------------------------------------------------------------------------
# statistical helpers


def mc_moment_test(values: np.ndarray, reference: float, n_se: float = 3.0):
    """Compare a Monte Carlo mean against a reference at n_se standard
    errors.  Heavy-tailed summands (empirical kurtosis blowing up) downgrade
    the estimate to a median of block means, whose error is still
    asymptotically normal."""
    values = np.asarray(values, dtype=float)
    n = values.size
    est = float(np.mean(values))
    sd = float(np.std(values))
    se = sd / math.sqrt(n)
    centered = values - est
    m4 = float(np.mean(centered ** 4))
    kurt = m4 / sd ** 4 if sd > 0 else 0.0
    if kurt > 1e3 and n >= 4096:
        k = 64
        blocks = values[: n - n % k].reshape(k, -1).mean(axis=1)
        est = float(np.median(blocks))
        # se of a median of k asymptotically normal block means
        se = float(np.std(blocks)) / math.sqrt(k) * math.sqrt(math.pi / 2.0)
    # floor guards degenerate (constant) summands against pure rounding noise
    tol = max(n_se * se, 1e-12 * (1.0 + abs(reference)))
    return est, tol, abs(est - reference) <= tol


def ks_statistic(samples: np.ndarray, cdf) -> float:
    x = np.sort(np.asarray(samples, dtype=float))
    n = x.size
    c = cdf(x)
    hi = np.max(np.arange(1, n + 1) / n - c)
    lo = np.max(c - np.arange(0, n) / n)
    return float(max(hi, lo))


def ks_critical(n: int, m: int = 0) -> float:
    """1% critical value; two-sample when m > 0."""
    if m:
        return 1.628 * math.sqrt((n + m) / (n * m))
    return 1.628 / math.sqrt(n)


def ks_two_sample(a: np.ndarray, b: np.ndarray) -> float:
    a = np.sort(a)
    b = np.sort(b)
    allv = np.concatenate([a, b])
    ca = np.searchsorted(a, allv, side="right") / a.size
    cb = np.searchsorted(b, allv, side="right") / b.size
    return float(np.max(np.abs(ca - cb)))


def _moment_check(cid, anchor, values, reference, n_se=3.0):
    est, tol, ok = mc_moment_test(values, reference, n_se)
    return CheckResult(cid, anchor, est, float(reference), tol, ok)


def _verdict_check(cid, anchor, verdict: certify.MonotonicityVerdict, want: str):
    return CheckResult(
        cid, anchor, 1.0 if verdict.verdict == want else 0.0, 1.0, 0.0,
        verdict.verdict == want,
    )


def _control_moment(cid, anchor, values, wrong_reference, n_se=3.0):
    """Passes when the wrong reference is rejected at n_se standard errors."""
    est, tol, agree = mc_moment_test(values, wrong_reference, n_se)
    return CheckResult(cid, anchor, est, float(wrong_reference), tol, not agree)


def _close(cid, anchor, estimate, reference, tol):
    return CheckResult(
        cid, anchor, float(estimate), float(reference), float(tol),
        abs(estimate - reference) <= tol,
    )


# ---------------------------------------------------------------------------
# suites


def _suite_thm11_laplace(seed: int, n: int):
    checks = []
    for alpha in (0.5, 0.75, 1.5, 2.0):
        g = stream(seed, f"THM11_LAPLACE:a={alpha}")
        T = stable.sample_T(abs(alpha - 1.0), alpha, g, n)
        for lam in (0.5, 1.0, 2.0):
            checks.append(
                _moment_check(
                    f"laplace-a{alpha}-l{lam}",
                    "mean of exp(-l T_{|a-1|}^{1/a}) equals F_a(l)",
                    np.exp(-lam * T),
                    mlfun.f_alpha(alpha, lam),
                )
            )
    for alpha in (0.75, 1.5):
        g = stream(seed, f"THM11_LAPLACE:R:a={alpha}")
        R = ggc.sample_R(alpha, g, n)
        checks.append(
            _moment_check(
                f"shifted-laplace-a{alpha}",
                "mean of exp(-R_a) equals exp(-1) F_a(1)",
                np.exp(-R),
                math.exp(-1.0) * mlfun.f_alpha(alpha, 1.0),
            )
        )
    g = stream(seed, "THM11_LAPLACE:control")
    T = stable.sample_T(0.5, 1.5, g, n)
    checks.append(
        _control_moment(
            "control-wrong-reference",
            "control: the same mean must reject F evaluated at a shifted argument",
            np.exp(-T),
            mlfun.f_alpha(1.5, 1.35),
        )
    )
    return checks


def _suite_thm11_hcm_boundary(seed: int, n: int):
    del seed, n  # analytic suite
    small_r = np.geomspace(1e-2, 1e2, 18)
    small_a = np.linspace(0.06, math.pi - 0.06, 13)
    checks = [
        _verdict_check(
            "hcm-accept-f-0.75",
            "F_a is hyperbolically completely monotone for a >= 1/2",
            certify.hcm_check(targets.f_alpha_target(0.75)),
            "consistent",
        ),
        _verdict_check(
            "hcm-reject-f-0.25",
            "F_a fails hyperbolic complete monotonicity for a < 1/2",
            certify.hcm_check(targets.f_alpha_target(0.25)),
            "violated",
        ),
    ]
    for alpha in (0.25, 0.75):
        checks.append(
            _verdict_check(
                f"stieltjes-f-{alpha}",
                "F_a maps the upper half plane into the lower one for a in (0,1)",
                certify.stieltjes_sign_check(
                    lambda z, a=alpha: mlfun.f_alpha_complex(a, z),
                    radii=small_r, angles=small_a,
                ),
                "consistent",
            )
        )
    checks.append(
        _verdict_check(
            "stieltjes-logderiv-f-0.75",
            "-F_a'/F_a is a Stieltjes transform for a >= 1/2",
            certify.stieltjes_sign_check(
                lambda z: -mlfun.f_alpha_deriv_complex(0.75, z)
                / mlfun.f_alpha_complex(0.75, z),
                radii=small_r, angles=small_a,
            ),
            "consistent",
        )
    )
    alpha, gam = 1.25, 0.6  # gam at the admissible edge (2-a)/a
    checks.append(
        _verdict_check(
            "stieltjes-f-composed-1.25",
            "F_a(z^g) stays Stieltjes for 1 < a <= 3/2, g <= (2-a)/a",
            certify.stieltjes_sign_check(
                lambda z: mlfun.f_alpha_complex(alpha, z ** gam),
                radii=small_r, angles=small_a,
            ),
            "consistent",
        )
    )
    checks.append(
        _verdict_check(
            "stieltjes-logderiv-composed-1.25",
            "-z^(g-1) F_a'(z^g)/F_a(z^g) stays Stieltjes on the same range",
            certify.stieltjes_sign_check(
                lambda z: -(z ** (gam - 1.0))
                * mlfun.f_alpha_deriv_complex(alpha, z ** gam)
                / mlfun.f_alpha_complex(alpha, z ** gam),
                radii=small_r, angles=small_a,
            ),
            "consistent",
        )
    )
    return checks


def _suite_thm12_stieltjes(seed: int, n: int):
    del seed, n
    checks = []
    for alpha in (1.25, 1.5, 1.75):
        checks.append(
            _verdict_check(
                f"stieltjes-logd1-{alpha}",
                "the first log-derivative target is Stieltjes for a in (1,2]",
                certify.stieltjes_sign_check(lambda z, a=alpha: mlfun.G1_prime(a, z)),
                "consistent",
            )
        )
    for alpha in (0.2, 0.3, 0.4):
        checks.append(
            _verdict_check(
                f"stieltjes-logd2-reject-{alpha}",
                "the second log-derivative target loses the sign property for a < 1/2",
                certify.stieltjes_sign_check(lambda z, a=alpha: mlfun.G2_prime(a, z)),
                "violated",
            )
        )
    for alpha in (0.6, 0.75, 0.9):
        checks.append(
            _verdict_check(
                f"stieltjes-logd2-accept-{alpha}",
                "the second log-derivative target keeps the sign property for a >= 1/2",
                certify.stieltjes_sign_check(lambda z, a=alpha: mlfun.G2_prime(a, z)),
                "consistent",
            )
        )
    return checks


def _suite_thm12_gg(seed: int, n: int):
    del seed, n
    checks = []
    for alpha, want in ((0.75, "consistent"), (1.5, "consistent"), (0.3, "violated")):
        checks.append(
            _verdict_check(
                f"hcm-gg-{alpha}",
                "the normalized transform of the signed density is HCM iff a >= 1/2",
                certify.hcm_check(targets.gg_target(alpha)),
                want,
            )
        )
    for alpha in (0.75, 1.5):
        checks.append(
            _close(
                f"gg-value-at-1-{alpha}",
                "the transform extends continuously across its removable point at 1",
                mlfun.laplace_G(alpha, 1.0 + 1e-9),
                (alpha - 1.0) / alpha,
                1e-7,
            )
        )
    return checks


def _suite_cor13_tau(seed: int, n: int):
    checks = []
    for alpha in (1.25, 1.5):
        g = stream(seed, f"COR13_TAU:laplace:a={alpha}")
        tau = ggc.sample_tau1(alpha, g, n)
        for lam in (0.5, 1.0, 2.0):
            checks.append(
                _moment_check(
                    f"tau1-laplace-a{alpha}-l{lam}",
                    "mean of exp(-l tau_1) equals H_a(l) for the stable passage time",
                    np.exp(-lam * tau),
                    ggc.laplace_tau1(alpha, lam),
                )
            )
    # second factorization: (G_1/tau_1)^(1/a) has the law of
    # G_1 times the order -1 size-biased T_{a-1}^(1/a)
    alpha = 1.5
    m = max(n // 10, 10000)
    g = stream(seed, "COR13_TAU:quotient")
    lhs = (g.standard_gamma(1.0, m) / ggc.sample_tau1(alpha, g, m)) ** (1.0 / alpha)
    g2 = stream(seed, "COR13_TAU:product")
    rhs = g2.standard_gamma(1.0, m) * stable.sample_T_biased(
        alpha - 1.0, alpha, -1.0, g2, m
    )
    d = ks_two_sample(lhs, rhs)
    crit = ks_critical(m, m)
    checks.append(
        CheckResult(
            "tau1-quotient-ks",
            "two-sample KS: the gamma-over-passage-time power matches its product form",
            d, 0.0, crit, d <= crit,
        )
    )
    g3 = stream(seed, "COR13_TAU:control")
    wrong = g3.standard_gamma(1.1, m) * stable.sample_T_biased(
        alpha - 1.0, alpha, -1.0, g3, m
    )
    d_bad = ks_two_sample(lhs, wrong)
    checks.append(
        CheckResult(
            "control-quotient-ks",
            "control: KS must reject a perturbed gamma factor",
            d_bad, 0.0, crit, d_bad > crit,
        )
    )
    checks.append(
        _verdict_check(
            "hcm-passage-quotient-1.5",
            "the renormalized quotient power density stays HCM",
            certify.hcm_check(
                targets.passage_quotient_density_target(1.5),
                u_grid=np.geomspace(0.1, 10.0, 5),
                w_grid=[2.01 * 1.6 ** j for j in range(5)],
                max_order=8,
                h_factors=(0.25,),
                probe=False,
            ),
            "consistent",
        )
    )
    return checks


def _suite_prop21_boundary(seed: int, n: int):
    del seed, n
    checks = []
    u = np.geomspace(1e-3, 1e3, 2001)
    thorin_specs = [
        ggc.GgcSpec(0.5, 0.5),
        ggc.GgcSpec(0.8, 0.6),
        ggc.GgcSpec(0.2, 0.4),
        ggc.GgcSpec(0.0, 0.45),
        ggc.GgcSpec(-math.cos(math.pi * 0.75), 0.75),  # exactly on the boundary
    ]
    for spec in thorin_specs:
        e = ggc.eta(spec, u)
        checks.append(
            _close(
                f"eta-range-c{spec.c:.4f}-t{spec.t}",
                "the normalized Thorin density stays within [0,1] for Thorin specs",
                float(max(e.max() - 1.0, -e.min(), 0.0)),
                0.0,
                1e-12,
            )
        )
    for spec in (ggc.GgcSpec(0.2, 0.85), ggc.GgcSpec(0.0, 0.6), ggc.GgcSpec(0.5, 0.85)):
        peak = float(ggc.eta(spec, np.array([1.0]))[0])
        checks.append(
            CheckResult(
                f"eta-exceeds-c{spec.c}-t{spec.t}",
                "outside the Thorin region the density peak at u=1 exceeds 1",
                peak, 1.0, 0.0, peak > 1.0,
            )
        )
        checks.append(
            _close(
                f"eta-peak-formula-c{spec.c}-t{spec.t}",
                "the peak matches its arctan closed form",
                peak, ggc.eta_max(spec), 1e-12,
            )
        )
    boundary = ggc.GgcSpec(-math.cos(math.pi * 0.75), 0.75)
    checks.append(
        _close(
            "eta-boundary-peak",
            "on the boundary c + cos(pi t) = 0 the peak equals 1 exactly",
            float(ggc.eta(boundary, np.array([1.0]))[0]), 1.0, 1e-12,
        )
    )
    for c in (0.0, 0.2, 0.5):
        for t in (0.5, 2.0 / 3.0, 0.85):
            spec = ggc.GgcSpec(c, t)
            fphi, fpp = targets.phi_pair(spec)
            v = certify.bernstein_check(fphi, fpp)
            want = "consistent" if spec.thorin else "violated"
            checks.append(
                _verdict_check(
                    f"bernstein-c{c}-t{t:.3f}",
                    "the Laplace exponent passes the Bernstein surrogate iff the spec is Thorin",
                    v, want,
                )
            )
    return checks


def _suite_cor22_cm_boundary(seed: int, n: int):
    del seed, n
    checks = []
    for alpha in (0.2, 0.3, 0.4):
        c = math.cos(math.pi * alpha)
        for dt, want in ((-0.02, "consistent"), (0.02, "violated")):
            t = 1.0 - alpha + dt
            v = certify.cm_check(targets.frakc_target(c, t))
            checks.append(
                _verdict_check(
                    f"cm-frakc-a{alpha}-t{t:.2f}",
                    "the cosine series is completely monotone iff t <= 1 - a",
                    v, want,
                )
            )
    return checks


def _suite_cor24_hcm_class(seed: int, n: int):
    del seed, n
    cases = [
        (0.8, 1.0, 0.6, "consistent"),
        (0.5, 0.5, 2.0 / 3.0, "consistent"),
        (0.1, 1.2, 0.9, "violated"),
        (0.0, 0.9, 0.85, "violated"),
        (0.3, 0.6, 1.4, "violated"),
    ]
    checks = []
    for c, a, t, want in cases:
        v = certify.hcm_check(targets.power_density_target(c, a, t))
        checks.append(
            _verdict_check(
                f"hcm-power-c{c}-a{a}-t{t:.2f}",
                "x^(a-1)/(1+2c x^t+x^(2t)) is HCM iff t <= 1, c >= 0, c + cos(pi t) >= 0",
                v, want,
            )
        )
    return checks


def _suite_thm31_x(seed: int, n: int):
    spec = ggc.GgcSpec(math.cos(math.pi * 0.3), 0.6)
    t, alpha = spec.t, spec.alpha
    checks = []

    body, _ = integrate.quad(lambda x: ggc.density_X(spec, x), 0.0, 1.0, limit=200)
    tail, _ = integrate.quad(
        lambda v: ggc.density_X(spec, 1.0 / v) / (v * v), 1e-11, 1.0, limit=400
    )
    checks.append(
        _close("density-mass", "the density of X integrates to one", body + tail, 1.0, 1e-6)
    )
    for lam in (0.5, 2.0):
        q, _ = integrate.quad(
            lambda x: math.exp(-lam * x) * ggc.density_X(spec, x), 0.0, np.inf, limit=300
        )
        checks.append(
            _close(
                f"density-laplace-l{lam}",
                "quadrature of the density reproduces the closed Laplace transform",
                q, ggc.laplace_X(spec, lam), 1e-5,
            )
        )
    for x in (0.4, 1.7):
        h = 1e-6
        num = (ggc.cdf_X(spec, x + h) - ggc.cdf_X(spec, x - h)) / (2.0 * h)
        checks.append(
            _close(
                f"cdf-derivative-x{x}",
                "the distribution function differentiates back to the density",
                num, ggc.density_X(spec, x), 1e-5,
            )
        )
    x0 = 1e-4
    checks.append(
        _close(
            "density-small-x",
            "x^(1-2t) times the density tends to 1/Gamma(2t) at zero",
            x0 ** (1.0 - 2.0 * t) * ggc.density_X(spec, x0) * math.gamma(2.0 * t),
            1.0, 1e-2,
        )
    )
    checks.append(
        _close(
            "mellin-at-t",
            "the negative moment at x = t equals pi a / (sin(pi a) Gamma(1+t))",
            ggc.mellin_X(spec, t),
            math.pi * alpha / (math.sin(math.pi * alpha) * math.gamma(1.0 + t)),
            0.0,
        )
    )
    d_ = 2e-6
    checks.append(
        _close(
            "mellin-continuity",
            "the gamma-product branch is continuous across its removable point",
            0.5 * (ggc.mellin_X(spec, t + d_) + ggc.mellin_X(spec, t - d_)),
            ggc.mellin_X(spec, t), 1e-8,
        )
    )
    checks.append(
        _close(
            "mellin-d-even",
            "the biased Thorin-variable Mellin transform is even",
            ggc.mellin_D_biased(spec, 0.23) - ggc.mellin_D_biased(spec, -0.23),
            0.0, 1e-12,
        )
    )
    s_ = 0.31
    lhs = stable.mellin_T(alpha, s_ / t)
    rhs = (
        math.gamma(t + s_) * math.gamma(t - s_) / math.gamma(t) ** 2
        * ggc.mellin_D_biased(spec, s_)
    )
    checks.append(
        _close(
            "mellin-d-cross",
            "the biased Mellin transform closes the gamma-ratio factorization identity",
            lhs / rhs, 1.0, 1e-8,
        )
    )
    checks.append(
        _close(
            "thorin-mass",
            "the leading power of the density at zero recovers total Thorin mass 2t",
            certify.thorin_mass_estimate(lambda x: ggc.density_X(spec, x)),
            2.0 * t, 2e-2,
        )
    )
    lam0 = 1.3
    fr_low, _ = integrate.quad(
        lambda x: (1.0 - math.exp(-lam0 * x)) * mlfun.frakC(spec.c, t, x) / x,
        0.0, 1.0, limit=200,
    )
    # tail mapped to (0, 1]; the integrand decays like v^(t-1) there
    fr_high, _ = integrate.quad(
        lambda v: (1.0 - math.exp(-lam0 / v)) * mlfun.frakC(spec.c, t, 1.0 / v) / v,
        1e-12, 1.0, limit=400,
    )
    fr = fr_low + fr_high
    checks.append(
        _close(
            "frullani",
            "the Laplace exponent equals 2t times the Frullani integral of the cosine series",
            2.0 * t * fr, float(ggc.phi(spec, lam0)), 1e-4,
        )
    )

    m = min(n, 4000)
    g = stream(seed, "THM31_X:duplication")
    xd = ggc.sample_X_duplicated(spec, 0.9, g, m)
    for mm in (0.3, -0.2):
        checks.append(
            _moment_check(
                f"duplication-mellin-{mm}",
                "index-raised sampling reproduces the closed negative moments",
                xd ** (-mm), ggc.mellin_X(spec, mm),
            )
        )
    g = stream(seed, "THM31_X:sample")
    xs = ggc.sample_X(spec, g, min(m, 1000))  # quantile sampling is quadrature-heavy
    checks.append(
        _moment_check(
            "inverse-cdf-mellin",
            "quantile sampling reproduces the closed negative moment",
            xs ** (-0.3), ggc.mellin_X(spec, 0.3),
        )
    )
    # endpoint factorizations of the Laplace transform
    g = stream(seed, "THM31_X:endpoint-c1")
    mend = max(n // 2, 10000)
    s_t = stable.sample_stable(t, g, mend)
    g2_pow = g.standard_gamma(2.0, mend) ** (1.0 / t)
    checks.append(
        _moment_check(
            "endpoint-c1",
            "at c = 1 the law factors as S_t times a gamma(2) power",
            np.exp(-s_t * g2_pow), 1.0 / (1.0 + 1.0) ** 2,
        )
    )
    g = stream(seed, "THM31_X:endpoint-c0")
    t0_ = 0.4  # the c = 0 factorization needs a stable index 2t < 1
    s_2t = stable.sample_stable(2.0 * t0_, g, mend)
    g1_pow = g.standard_gamma(1.0, mend) ** (1.0 / (2.0 * t0_))
    checks.append(
        _moment_check(
            "endpoint-c0",
            "at c = 0 the law factors as S_2t times a gamma(1) power",
            np.exp(-s_2t * g1_pow), 1.0 / 2.0,
        )
    )
    near1 = ggc.GgcSpec(math.cos(math.pi * 1e-4), t)
    for y in (0.5, 2.0):
        checks.append(
            _close(
                f"endpoint-c1-density-y{y}",
                "the convolution density at c = 1 is the continuous limit of the general one",
                ggc.density_X_boundary_c1(t, y), ggc.density_X(near1, y), 1e-6,
            )
        )
    return checks


def _suite_cor32_factorization(seed: int, n: int):
    spec = ggc.GgcSpec(math.cos(math.pi * 0.3), 0.6)
    t, alpha = spec.t, spec.alpha
    checks = []
    ss = np.linspace(-0.95 * t, 0.95 * t, 20)
    worst = 0.0
    for s_ in ss:
        lhs = stable.mellin_T(alpha, s_ / t)
        rhs = (
            math.gamma(t + s_) * math.gamma(t - s_) / math.gamma(t) ** 2
            * ggc.mellin_D_biased(spec, s_)
        )
        worst = max(worst, abs(lhs / rhs - 1.0))
    checks.append(
        _close(
            "gamma-identity",
            "the three-factor Mellin identity holds along the whole moment strip",
            worst, 0.0, 1e-10,
        )
    )
    g = stream(seed, "COR32_FACTORIZATION:gamma-quotient")
    m = max(n // 2, 10000)
    q = g.standard_gamma(t, m) / g.standard_gamma(t, m)
    for s_ in (0.25, -0.4):
        checks.append(
            _moment_check(
                f"gamma-quotient-moment-{s_}",
                "the symmetric gamma quotient has the gamma-ratio Mellin transform",
                q ** s_,
                math.gamma(t + s_) * math.gamma(t - s_) / math.gamma(t) ** 2,
            )
        )
    g = stream(seed, "COR32_FACTORIZATION:duplication-ks")
    direct = ggc.sample_X(spec, g, min(max(n // 20, 500), 1200))
    dup = ggc.sample_X_duplicated(spec, 0.9, g, min(max(n // 5, 2000), 4000))
    d = ks_two_sample(direct, dup)
    crit = ks_critical(direct.size, dup.size)
    checks.append(
        CheckResult(
            "duplication-ks",
            "two-sample KS: direct quantile draws match index-raised draws",
            d, 0.0, crit, d <= crit,
        )
    )
    return checks


def _suite_stable_basics(seed: int, n: int):
    checks = []
    alpha = 0.7
    g = stream(seed, "STABLE_BASICS:moments")
    s = stable.sample_stable(alpha, g, n)
    for m_ in (0.3, 1.0):
        checks.append(
            _moment_check(
                f"stable-mellin-{m_}",
                "negative moments of S_a match the gamma-ratio formula",
                s ** (-m_), stable.mellin_stable(alpha, m_),
            )
        )
    for lam in (1.0, 2.0):
        checks.append(
            _moment_check(
                f"stable-laplace-l{lam}",
                "the empirical Laplace transform of S_a equals exp(-l^a)",
                np.exp(-lam * s), math.exp(-(lam ** alpha)),
            )
        )
    g = stream(seed, "STABLE_BASICS:ks-half")
    m = max(n // 10, 10000)
    sh = stable.sample_stable(0.5, g, m)
    d = ks_statistic(sh, stable.cdf_stable_half)
    checks.append(
        CheckResult(
            "stable-half-ks",
            "S_{1/2} draws match the closed erfc distribution function",
            d, 0.0, ks_critical(m), d <= ks_critical(m),
        )
    )
    g = stream(seed, "STABLE_BASICS:facto")
    a2 = 0.6
    e = (g.standard_gamma(1.0, m) / stable.sample_stable(a2, g, m)) ** a2
    d = ks_statistic(e, lambda x: 1.0 - np.exp(-x))
    checks.append(
        CheckResult(
            "exponential-factorization-ks",
            "the a-th power of gamma over S_a is a unit exponential",
            d, 0.0, ks_critical(m), d <= ks_critical(m),
        )
    )
    g = stream(seed, "STABLE_BASICS:subordination")
    a_, gam_ = 0.35, 0.5
    sub = stable.sample_stable(a_ / gam_, g, m) ** (1.0 / gam_) * stable.sample_stable(
        gam_, g, m
    )
    checks.append(
        _moment_check(
            "subordination-laplace",
            "composing stable subordinators multiplies the indices",
            np.exp(-sub), math.exp(-1.0),
        )
    )
    g = stream(seed, "STABLE_BASICS:beta-gamma")
    a_b, b_b = 0.8, 1.4
    bg = g.beta(a_b, b_b, m) * g.standard_gamma(a_b + b_b, m)
    s_exp = 0.7
    checks.append(
        _moment_check(
            "beta-gamma-algebra",
            "thinning a gamma variable by a matching beta keeps it gamma",
            bg ** s_exp, math.gamma(a_b + s_exp) / math.gamma(a_b),
        )
    )
    g = stream(seed, "STABLE_BASICS:controls")
    sc_ = stable.sample_stable(alpha, g, m)
    checks.append(
        _control_moment(
            "control-wrong-moment",
            "control: the moment test must reject a perturbed reference",
            sc_ ** (-0.3), stable.mellin_stable(alpha, 0.3) * 1.02,
        )
    )
    d_bad = ks_statistic(sc_, stable.cdf_stable_half)
    checks.append(
        CheckResult(
            "control-wrong-cdf",
            "control: the KS test must reject the wrong distribution function",
            d_bad, 0.0, ks_critical(m), d_bad > ks_critical(m),
        )
    )
    return checks


SUITES = {
    "THM11_LAPLACE": (_suite_thm11_laplace, 1_000_000),
    "THM11_HCM_BOUNDARY": (_suite_thm11_hcm_boundary, 0),
    "THM12_STIELTJES": (_suite_thm12_stieltjes, 0),
    "THM12_GG": (_suite_thm12_gg, 0),
    "COR13_TAU": (_suite_cor13_tau, 1_000_000),
    "PROP21_BOUNDARY": (_suite_prop21_boundary, 0),
    "COR22_CM_BOUNDARY": (_suite_cor22_cm_boundary, 0),
    "COR24_HCM_CLASS": (_suite_cor24_hcm_class, 0),
    "THM31_X": (_suite_thm31_x, 100_000),
    "COR32_FACTORIZATION": (_suite_cor32_factorization, 100_000),
    "STABLE_BASICS": (_suite_stable_basics, 1_000_000),
}


def run_suite(name: str, n: int | None = None, seed: int = 0) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn, default_n = SUITES[name]
    if n is None:
        n = default_n
    t0 = time.perf_counter()
    checks = fn(seed, n)
    dt = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(name, seed, n, checks, dt)


def _run_one(args):
    name, n, seed = args
    return run_suite(name, n, seed)


def run_all(n: int | None = None, seed: int = 0, workers: int = 1):
    names = list(SUITES)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, [(nm, n, seed) for nm in names]))
    return [run_suite(nm, n, seed) for nm in names]
