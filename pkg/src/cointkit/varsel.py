"""Unrestricted VAR estimation in levels and lag-order selection.

All information criteria follow the per-observation convention

    AIC = -2 ll / T + 2 n / T
    SC  = -2 ll / T + n log(T) / T
    HQ  = -2 ll / T + 2 n log(log T) / T

with n the total number of estimated coefficients across equations, and
every candidate lag is fitted on the common sample implied by the largest
candidate so the criteria are comparable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SeriesTooShort
from .linreg import RegressionFit, gaussian_loglik, ols_fit, residual_covariance
from .series import Dataset


@dataclass(frozen=True)
class VarFit:
    """VAR(p) in levels: per-equation OLS fits plus the joint residual block."""

    p: int
    equations: tuple[RegressionFit, ...]
    residuals: np.ndarray        # (T - presample) x k
    regressors: np.ndarray       # shared design, intercept first
    n_effective: int
    n_params: int                # coefficients across all equations
    names: tuple[str, ...]

    @property
    def loglik(self) -> float:
        return gaussian_loglik(residual_covariance(self.residuals), self.n_effective)


@dataclass(frozen=True)
class Criteria:
    aic: float
    sc: float
    hq: float


@dataclass(frozen=True)
class LagSelectionRow:
    p: int
    aic: float
    sc: float
    hq: float


@dataclass(frozen=True)
class LagSelectionTable:
    rows: tuple[LagSelectionRow, ...]
    starred: dict[str, int]      # criterion -> argmin lag
    recommended: int
    rule: str
    n_effective: int


def var_fit(d: Dataset, p: int, presample: int | None = None) -> VarFit:
    """OLS estimate of a VAR(p) in levels.

    Each variable is regressed on an intercept and p lags of every variable.
    ``presample`` discards extra initial observations so that different lag
    orders can share the same estimation rows; it defaults to p.
    """
    if p < 1:
        raise ValueError(f"lag order must be >= 1, got {p}")
    if presample is None:
        presample = p
    if presample < p:
        raise ValueError(f"presample {presample} smaller than lag order {p}")
    y = d.to_matrix()
    T, k = y.shape
    n_eff = T - presample
    n_regressors = 1 + k * p
    if n_eff <= n_regressors:
        raise SeriesTooShort(
            f"VAR({p}) needs more than {n_regressors} effective rows, have {n_eff}"
        )
    rows = slice(presample, T)
    X = np.column_stack(
        [np.ones(n_eff)] + [y[presample - j:T - j] for j in range(1, p + 1)]
    )
    fits = tuple(ols_fit(X, y[rows, i]) for i in range(k))
    resid = np.column_stack([f.residuals for f in fits])
    return VarFit(
        p=p,
        equations=fits,
        residuals=resid,
        regressors=X,
        n_effective=n_eff,
        n_params=k * n_regressors,
        names=d.names,
    )


def information_criteria(loglik: float, T_effective: int, n_params: int) -> Criteria:
    """AIC/SC/HQ per-observation scores for a system log-likelihood."""
    if T_effective <= 0:
        raise ValueError(f"T_effective must be positive, got {T_effective}")
    T = float(T_effective)
    base = -2.0 * loglik / T
    return Criteria(
        aic=base + 2.0 * n_params / T,
        sc=base + n_params * math.log(T) / T,
        hq=base + 2.0 * n_params * math.log(math.log(T)) / T,
    )


def select_lag(d: Dataset, p_max: int, rule: str = "majority") -> LagSelectionTable:
    """Tabulate AIC/SC/HQ for VAR(1..p_max) and recommend a lag order.

    The default rule takes the majority vote over the three criteria with
    ties broken toward the smaller lag; "aic", "sc" or "hq" take a single
    criterion's argmin instead.
    """
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max}")
    if rule not in ("majority", "aic", "sc", "hq"):
        raise ValueError(f"unknown selection rule {rule!r}")
    rows = []
    for p in range(1, p_max + 1):
        fit = var_fit(d, p, presample=p_max)
        crit = information_criteria(fit.loglik, fit.n_effective, fit.n_params)
        rows.append(LagSelectionRow(p, crit.aic, crit.sc, crit.hq))
    starred = {
        name: min(rows, key=lambda r: (getattr(r, name), r.p)).p
        for name in ("aic", "sc", "hq")
    }
    if rule == "majority":
        votes: dict[int, int] = {}
        for lag in starred.values():
            votes[lag] = votes.get(lag, 0) + 1
        best = max(votes.values())
        recommended = min(lag for lag, v in votes.items() if v == best)
    else:
        recommended = starred[rule]
    return LagSelectionTable(
        rows=tuple(rows),
        starred=starred,
        recommended=recommended,
        rule=rule,
        n_effective=d.n_obs - p_max,
    )
