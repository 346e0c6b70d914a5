"""Augmented Dickey-Fuller testing and integration-order classification.

The test statistic is the OLS t-ratio on the lagged level in

    dy_t = d_t + gamma * y_{t-1} + sum_{i=1..lags} phi_i * dy_{t-i} + u_t

with d_t one of no deterministics, a constant, or a constant plus linear
trend.  P-values come from the MacKinnon (1994) response surfaces; when the
effective sample size is known they are first recentered on the MacKinnon
(2010) finite-sample critical values, which keeps the test correctly sized
in the short annual panels this package is aimed at.

References
----------
MacKinnon, J.G. 1994. "Approximate asymptotic distribution functions for
    unit-root and cointegration tests." JBES 12, 167-76.
MacKinnon, J.G. 2010. "Critical values for cointegration tests." Queen's
    University Economics Dept. Working Paper 1227.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import _mackinnon as mk
from ._stats import norm_cdf
from .errors import SeriesTooShort, ZeroVariance
from .linreg import RegressionFit, ols_fit
from .series import Series, difference

Deterministic = Literal["none", "constant", "constant_and_trend"]

DETERMINISTIC_CASES = ("none", "constant", "constant_and_trend")
_N_DET = {"none": 0, "constant": 1, "constant_and_trend": 2}


@dataclass(frozen=True)
class AdfResult:
    statistic: float
    p_value: float
    lags_used: int
    deterministic: Deterministic
    n_effective: int
    critical_values: dict[str, float]


@dataclass(frozen=True)
class IntegrationDecision:
    variable: str
    level: AdfResult
    first_difference: AdfResult
    order: Literal["I0", "I1", "inconclusive"]
    alpha: float


def _check_case(deterministic: str) -> str:
    if deterministic not in DETERMINISTIC_CASES:
        raise ValueError(f"unknown deterministic case {deterministic!r}")
    return deterministic


def mackinnon_crit(deterministic: Deterministic, n_effective: int | None = None) -> dict[str, float]:
    """1/5/10% Dickey-Fuller critical values; asymptotic when n is None."""
    _check_case(deterministic)
    out = {}
    for level, coefs in zip(mk.CRIT_LEVELS, mk.CRIT_SURFACE[deterministic]):
        b0, b1, b2, b3 = coefs
        if n_effective is None:
            out[f"{level:.0%}"] = b0
        else:
            n = float(n_effective)
            out[f"{level:.0%}"] = b0 + b1 / n + b2 / n**2 + b3 / n**3
    return out


def _finite_sample_warp(statistic: float, deterministic: str, n_effective: int) -> float:
    """Map a finite-sample statistic onto the asymptotic tau scale.

    Piecewise-linear through the three (finite-sample cv -> asymptotic cv)
    anchor pairs, parallel shift beyond the outermost anchors.
    """
    surface = mk.CRIT_SURFACE[deterministic]
    n = float(n_effective)
    xs = [b0 + b1 / n + b2 / n**2 + b3 / n**3 for (b0, b1, b2, b3) in surface]
    ys = [b0 for (b0, _, _, _) in surface]
    if statistic <= xs[0]:
        return statistic + (ys[0] - xs[0])
    if statistic >= xs[-1]:
        return statistic + (ys[-1] - xs[-1])
    for i in range(len(xs) - 1):
        if xs[i] <= statistic <= xs[i + 1]:
            w = (statistic - xs[i]) / (xs[i + 1] - xs[i])
            return ys[i] + w * (ys[i + 1] - ys[i])
    return statistic  # unreachable


def mackinnon_pvalue(
    statistic: float, deterministic: Deterministic, n_effective: int | None = None
) -> float:
    """Approximate p-value of the Dickey-Fuller t distribution.

    Total over finite statistics; clamped to [0, 1] outside the domain of
    the response surface.
    """
    _check_case(deterministic)
    if not math.isfinite(statistic):
        raise ValueError(f"statistic must be finite, got {statistic}")
    tau = statistic
    if n_effective is not None:
        tau = _finite_sample_warp(statistic, deterministic, n_effective)
    if tau < mk.TAU_MIN[deterministic]:
        return 0.0
    if tau > mk.TAU_MAX[deterministic]:
        return 1.0
    coefs = mk.TAU_SMALLP[deterministic] if tau <= mk.TAU_STAR[deterministic] else mk.TAU_LARGEP[deterministic]
    poly = sum(c * tau**i for i, c in enumerate(coefs))
    p = norm_cdf(poly)
    return min(max(p, 0.0), 1.0)


def _adf_blocks(
    values: np.ndarray, deterministic: str, lags: int, offset: int
) -> tuple[np.ndarray, np.ndarray]:
    """Response and design of the ADF regression, skipping ``offset`` initial
    differences so candidate lag lengths share one estimation sample."""
    dy = np.diff(values)
    n_eff = dy.shape[0] - offset
    resp = dy[offset:]
    cols = [values[offset:-1]]
    cols += [dy[offset - j:-j] for j in range(1, lags + 1)]
    if deterministic != "none":
        cols.append(np.ones(n_eff))
    if deterministic == "constant_and_trend":
        cols.append(np.arange(1.0, n_eff + 1.0))
    return resp, np.column_stack(cols)


def _require_length(s: Series, deterministic: str, lags: int) -> None:
    # T - 1 - lags regression rows must exceed the 1 + lags + det regressors
    needed = 2 * lags + _N_DET[deterministic] + 3
    if len(s) < needed:
        raise SeriesTooShort(
            f"{s.name}: length {len(s)} too short for ADF with {lags} lags and "
            f"{deterministic!r} deterministics (need {needed})"
        )


def auto_lag(
    s: Series, deterministic: Deterministic = "constant", max_lags: int | None = None
) -> int:
    """Lag order in 0..max_lags minimizing the Schwarz criterion of the ADF
    regression, all candidates evaluated on the common sample."""
    _check_case(deterministic)
    T = len(s)
    feasible = (T - _N_DET[deterministic] - 3) // 2
    if max_lags is None:
        max_lags = int(math.floor(12.0 * (T / 100.0) ** 0.25))
        max_lags = max(min(max_lags, feasible), 0)
    _require_length(s, deterministic, max_lags)
    values = s.to_array()
    if np.ptp(np.diff(values)) == 0.0:
        raise ZeroVariance(f"{s.name}: differenced series is constant")
    best_lag, best_sc = 0, math.inf
    for lag in range(max_lags + 1):
        resp, X = _adf_blocks(values, deterministic, lag, offset=max_lags)
        fit = ols_fit(X, resp)
        n = fit.n_obs
        sc = math.log(max(fit.residuals @ fit.residuals / n, 1e-300)) + fit.n_regressors * math.log(n) / n
        if sc < best_sc - 1e-14:
            best_lag, best_sc = lag, sc
    return best_lag


def adf_test(
    s: Series,
    deterministic: Deterministic = "constant",
    lags: int | Literal["auto"] = "auto",
    max_lags: int | None = None,
) -> AdfResult:
    """Run the ADF regression and report the unit-root t-ratio and p-value."""
    _check_case(deterministic)
    values = s.to_array()
    if np.ptp(np.diff(values)) == 0.0:
        raise ZeroVariance(f"{s.name}: differenced series is constant")
    if lags == "auto":
        lags = auto_lag(s, deterministic, max_lags)
    elif lags < 0:
        raise ValueError(f"lags must be nonnegative, got {lags}")
    _require_length(s, deterministic, lags)
    resp, X = _adf_blocks(values, deterministic, lags, offset=lags)
    fit: RegressionFit = ols_fit(X, resp)
    statistic = float(fit.t_statistics[0])
    n_eff = fit.n_obs
    return AdfResult(
        statistic=statistic,
        p_value=mackinnon_pvalue(statistic, deterministic, n_eff),
        lags_used=int(lags),
        deterministic=deterministic,
        n_effective=n_eff,
        critical_values=mackinnon_crit(deterministic, n_eff),
    )


def classify_integration(
    s: Series,
    alpha: float = 0.05,
    level_deterministic: Deterministic = "constant_and_trend",
    diff_deterministic: Deterministic = "constant",
    lags: int | Literal["auto"] = "auto",
    max_lags: int | None = None,
) -> IntegrationDecision:
    """Classify a series as I(0), I(1) or inconclusive at level alpha.

    Trending macro aggregates get a constant-and-trend level test and a
    constant-only test on the first difference by default; both cases are
    overridable per run.
    """
    level = adf_test(s, level_deterministic, lags, max_lags)
    diff = adf_test(difference(s), diff_deterministic, lags, max_lags)
    if level.p_value <= alpha:
        order = "I0"
    elif diff.p_value <= alpha:
        order = "I1"
    else:
        order = "inconclusive"
    return IntegrationDecision(s.name, level, diff, order, alpha)
