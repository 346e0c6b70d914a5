"""Thin wrappers over scipy.special for the distribution tails the tests need."""

from __future__ import annotations

import numpy as np
from scipy import special


def norm_cdf(x: float) -> float:
    return float(special.ndtr(x))


def chi2_sf(x: float, df: int) -> float:
    """Upper tail of the chi-square distribution via the regularized
    upper incomplete gamma function."""
    if x < 0:
        return 1.0
    return float(special.gammaincc(df / 2.0, x / 2.0))


def t_critical(alpha: float, df: int) -> float:
    """Two-sided Student-t critical value at level alpha."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    return float(special.stdtrit(df, 1.0 - alpha / 2.0))


def f_sf(x: float, dfn: int, dfd: int) -> float:
    if x <= 0 or not np.isfinite(x):
        return 1.0 if x <= 0 else 0.0
    return float(special.fdtrc(dfn, dfd, x))
