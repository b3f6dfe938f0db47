"""Positive stable laws, the generalized-Cauchy ratio family, and samplers.

S_a denotes the positive a-stable variable normalized by
E[exp(-l S_a)] = exp(-l^a).  T_a denotes the ratio of two independent
copies raised symmetrically, whose power T_a^(1/t) carries the explicit
density ``density_T_power``.  All samplers draw from a numpy Generator so
they compose with the named streams in :mod:`mlstable.streams`.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as sc


def _check_index(alpha: float) -> None:
    if not (0.0 < alpha < 1.0):
        raise ValueError(f"stable index must lie in (0, 1), got {alpha}")


def sample_stable(alpha: float, gen: np.random.Generator, size: int) -> np.ndarray:
    """Draw S_a by the integral-representation method: a power of the
    auxiliary angular function at a uniform, damped by an exponential."""
    _check_index(alpha)
    u = gen.random(size)
    # keep the angular function away from the endpoint singularities
    u = np.clip(u, 1e-16, 1.0 - 1e-16)
    e = gen.standard_gamma(1.0, size)
    pa = math.pi * alpha
    s_u = (
        np.sin(pa * u) ** alpha
        * np.sin(math.pi * (1.0 - alpha) * u) ** (1.0 - alpha)
        / np.sin(math.pi * u)
    )
    return s_u ** (1.0 / alpha) * e ** (-(1.0 - alpha) / alpha)


def mellin_stable(alpha: float, s: float) -> float:
    """E[S_a^(-s)] = Gamma(1 + s/a) / Gamma(1 + s), finite for s > -a."""
    _check_index(alpha)
    if s <= -alpha:
        raise ValueError("moment diverges: need s > -alpha")
    return math.gamma(1.0 + s / alpha) / math.gamma(1.0 + s)


def cdf_stable_half(x):
    """Closed-form distribution function of S_{1/2}: erfc(1/(2 sqrt x))."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = sc.erfc(0.5 / np.sqrt(x[pos]))
    return out


def density_stable_half(x: float) -> float:
    if x <= 0:
        return 0.0
    return math.exp(-1.0 / (4.0 * x)) / (2.0 * math.sqrt(math.pi) * x ** 1.5)


# ---------------------------------------------------------------------------
# The two-sided ratio variable T_a and its powers


def density_T_power(alpha: float, t: float, x: float) -> float:
    """Density of T_a^(1/t):

        (t sin(pi a) / (pi a)) x^(t-1) / (1 + 2 cos(pi a) x^t + x^(2t)).
    """
    _check_index(alpha)
    if t <= 0:
        raise ValueError("power parameter t must be positive")
    if x < 0:
        return 0.0
    if x == 0.0:
        if t < 1:
            raise ValueError("density diverges at 0 for t < 1")
        return 0.0 if t > 1 else density_T_power(alpha, t, 1e-300)
    pa = math.pi * alpha
    xt = x ** t
    return (t * math.sin(pa) / (math.pi * alpha)) * x ** (t - 1.0) / (
        1.0 + 2.0 * math.cos(pa) * xt + xt * xt
    )


def cdf_T(alpha: float, x) -> np.ndarray:
    """Distribution function of T_a on (0, infty).

    Integrates the a = 1 (Cauchy-type) kernel in closed form:
    P(T_a <= x) = 1 + (arctan((x + cos pi a)/sin pi a) - pi/2) / (pi a).
    """
    _check_index(alpha)
    x = np.asarray(x, dtype=float)
    pa = math.pi * alpha
    out = 1.0 + (np.arctan((x + math.cos(pa)) / math.sin(pa)) - math.pi / 2.0) / pa
    return np.where(x <= 0.0, 0.0, out)


def cdf_T_power(alpha: float, t: float, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return cdf_T(alpha, np.where(x > 0, x, 0.0) ** t)


def sample_T(alpha: float, t: float, gen: np.random.Generator, size: int) -> np.ndarray:
    """Draw T_a^(1/t) by inverting cdf_T in closed form."""
    if alpha == 0.0:
        # degenerate limit: ratio of two unit-mean gamma variables
        g1 = gen.standard_gamma(1.0, size)
        g2 = gen.standard_gamma(1.0, size)
        return (g1 / g2) ** (1.0 / t)
    if alpha == 1.0:
        return np.ones(size)
    _check_index(alpha)
    u = gen.random(size)
    pa = math.pi * alpha
    T = math.sin(pa) * np.tan(pa * (u - 1.0) + math.pi / 2.0) - math.cos(pa)
    # u ~ 0 can land a hair below 0 through rounding
    T = np.maximum(T, 1e-300)
    return T ** (1.0 / t)


def mellin_T(alpha: float, s: complex) -> complex:
    """E[T_a^s] = Gamma(1-s) Gamma(1+s) / (Gamma(1-as) Gamma(1+as)), |Re s| < 1."""
    _check_index(alpha)
    if abs(complex(s).real) >= 1.0:
        raise ValueError("moment diverges: need |Re s| < 1")
    num = sc.gamma(1.0 - s) * sc.gamma(1.0 + s)
    den = sc.gamma(1.0 - alpha * s) * sc.gamma(1.0 + alpha * s)
    out = num / den
    if isinstance(s, (int, float)):
        return float(np.real(out))
    return complex(out)


def sample_T_biased(
    alpha: float,
    t: float,
    u: float,
    gen: np.random.Generator,
    size: int,
) -> np.ndarray:
    """Draw from the size-biased law x^u f(x)/E[.] where f is the density of
    T_a^(1/t).

    Uses rejection from the piecewise-power envelope of the exact density
    x^(b-1)/(x^2 + 2 c x + 1) of the t = 1 variable with b = 1 + u/t; the
    envelope constant is 1/(1 - max(-c,0)^2).
    """
    _check_index(alpha)
    b = 1.0 + u / t
    if not (0.0 < b < 2.0):
        raise ValueError("size bias exponent out of range: need -t < u < t")
    c = math.cos(math.pi * alpha)
    bound = 1.0 / (1.0 - max(-c, 0.0) ** 2)
    out = np.empty(size)
    have = 0
    # proposal: density prop. to x^(b-1) on (0,1], x^(b-3) on (1,inf);
    # mass split b-dependent: 1/b vs 1/(2-b)
    p_low = (1.0 / b) / (1.0 / b + 1.0 / (2.0 - b))
    while have < size:
        m = max(2 * (size - have), 1024)
        u1 = gen.random(m)
        u2 = gen.random(m)
        low = u1 < p_low
        x = np.empty(m)
        x[low] = u2[low] ** (1.0 / b)
        x[~low] = u2[~low] ** (-1.0 / (2.0 - b))
        # acceptance ratio: [max(1,x^2)/(x^2+2cx+1)] / bound
        acc = np.maximum(1.0, x * x) / (x * x + 2.0 * c * x + 1.0) / bound
        keep = gen.random(m) < acc
        x = x[keep]
        take = min(size - have, x.size)
        out[have : have + take] = x[:take]
        have += take
    return out ** (1.0 / t)


def mellin_T_biased(alpha: float, t: float, u: float, s: complex) -> complex:
    """E[W^s] for W the x^u size-biasing of T_a^(1/t):
    mellin_T((s+u)/t) / mellin_T(u/t)."""
    return mellin_T(alpha, (s + u) / t) / mellin_T(alpha, u / t)
