"""Named certification targets.

Each factory wraps one of the package's analytic families as an
:class:`~mlstable.certify.AnalyticFn` with whatever extended evaluators the
family supports.  The registry maps CLI names to factories.
"""

from __future__ import annotations

import math

import mpmath as mp

from . import ggc, mlfun, stable
from .certify import AnalyticFn


def frakc_target(c: float, t: float) -> AnalyticFn:
    return AnalyticFn(
        evaluator=lambda x: mlfun.frakC(c, t, x),
        domain=(1e-8, 1e6),
        mp_evaluator=lambda x: mlfun.frakC_mp(c, t, x),
        complex_evaluator=lambda z: mlfun.frakC_complex(c, t, z),
        label=f"frakc(c={c}, t={t})",
    )


def f_alpha_target(alpha: float) -> AnalyticFn:
    return AnalyticFn(
        evaluator=lambda x: mlfun.f_alpha(alpha, x),
        domain=(1e-8, 1e7),
        complex_evaluator=lambda z: mlfun.f_alpha_complex(alpha, z),
        label=f"f_alpha(alpha={alpha})",
    )


def density_T_target(alpha: float, t: float) -> AnalyticFn:
    pa = math.pi * alpha

    def fmp(x):
        a = mp.mpf(alpha)
        tt = mp.mpf(t)
        xt = x ** tt
        return (tt * mp.sinpi(a) / (mp.pi * a)) * x ** (tt - 1) / (
            1 + 2 * mp.cospi(a) * xt + xt * xt
        )

    def fc(z):
        z = complex(z)
        zt = z ** t
        return (t * math.sin(pa) / (math.pi * alpha)) * z ** (t - 1.0) / (
            1.0 + 2.0 * math.cos(pa) * zt + zt * zt
        )

    return AnalyticFn(
        evaluator=lambda x: stable.density_T_power(alpha, t, x),
        domain=(1e-8, 1e8),
        mp_evaluator=fmp,
        complex_evaluator=fc,
        label=f"density_t(alpha={alpha}, t={t})",
    )


def gg_target(alpha: float) -> AnalyticFn:
    return AnalyticFn(
        evaluator=lambda x: mlfun.hcm_gg(alpha, x).real,
        domain=(1e-8, 1e8),
        complex_evaluator=lambda z: mlfun.hcm_gg(alpha, z),
        label=f"gg(alpha={alpha})",
    )


def power_density_target(c: float, a: float, t: float) -> AnalyticFn:
    def ev(x):
        xt = x ** t
        return x ** (a - 1.0) / (1.0 + 2.0 * c * xt + xt * xt)

    def cev(z):
        z = complex(z)
        zt = z ** t
        return z ** (a - 1.0) / (1.0 + 2.0 * c * zt + zt * zt)

    return AnalyticFn(
        ev, (1e-8, 1e8), None, cev, label=f"power_density(c={c}, a={a}, t={t})"
    )


def phi_pair(spec: ggc.GgcSpec):
    """(phi, phi') pair for the Bernstein-surrogate check."""
    fphi = AnalyticFn(
        lambda x: float(ggc.phi(spec, x)),
        (1e-8, 1e8),
        label=f"phi(c={spec.c}, t={spec.t})",
    )
    fpp = AnalyticFn(
        lambda x: ggc.phi_prime(spec, x),
        (1e-8, 1e8),
        None,
        lambda z: ggc.phi_prime_complex(spec, z),
        label=f"phi_prime(c={spec.c}, t={spec.t})",
    )
    return fphi, fpp


def passage_quotient_density_target(alpha: float) -> AnalyticFn:
    """Density of (G_1/tau_1)^(1/(2-a)): (2-a) x^(1-a) (-H_a'(x^(2-a)))."""

    def ev(x):
        return (2.0 - alpha) * x ** (1.0 - alpha) * (
            -mlfun.h_alpha_deriv(alpha, x ** (2.0 - alpha))
        )

    return AnalyticFn(ev, (1e-6, 1e5), label=f"passage_quotient(alpha={alpha})")


REGISTRY = {
    "frakc": (frakc_target, ("c", "t")),
    "f-alpha": (f_alpha_target, ("alpha",)),
    "density-t": (density_T_target, ("alpha", "t")),
    "gg": (gg_target, ("alpha",)),
    "power-density": (power_density_target, ("c", "a", "t")),
}
