"""Mittag-Leffler functions, positive stable laws, and generalized gamma
convolutions built from them, with numerical certificates for complete
monotonicity properties and a Monte Carlo verification harness."""

from .ggc import (
    GgcSpec,
    cdf_X,
    density_X,
    eta,
    eta_max,
    laplace_X,
    laplace_tau1,
    mellin_D_biased,
    mellin_X,
    phi,
    sample_R,
    sample_tau1,
    sample_X,
    sample_X_duplicated,
)
from .mlfun import (
    PrecisionError,
    f_alpha,
    f_alpha_deriv,
    frakC,
    g_alpha,
    h_alpha,
    h_alpha_deriv,
    laplace_G,
    ml_deriv,
    ml_eval,
)
from .stable import (
    cdf_stable_half,
    cdf_T,
    mellin_stable,
    mellin_T,
    sample_stable,
    sample_T,
)
from .streams import stream

__version__ = "0.1.0"

__all__ = [
    "GgcSpec",
    "PrecisionError",
    "cdf_T",
    "cdf_X",
    "cdf_stable_half",
    "density_X",
    "eta",
    "eta_max",
    "f_alpha",
    "f_alpha_deriv",
    "frakC",
    "g_alpha",
    "h_alpha",
    "h_alpha_deriv",
    "laplace_G",
    "laplace_X",
    "laplace_tau1",
    "mellin_D_biased",
    "mellin_T",
    "mellin_X",
    "mellin_stable",
    "ml_deriv",
    "ml_eval",
    "phi",
    "sample_R",
    "sample_T",
    "sample_X",
    "sample_X_duplicated",
    "sample_stable",
    "sample_tau1",
    "stream",
]
