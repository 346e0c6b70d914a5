"""Rank-restricted vector error correction estimation.

The cointegrating space comes from the Johansen step; conditional on those
beta columns each equation is estimated by OLS:

    dy_t[i] = det_t + sum_j Gamma_j dy_{t-j} + sum_m lambda_m ec^(m)_{t-1} + u_t[i]

with det_t following the Johansen deterministic case (nothing for "none"
and "rconst", an intercept for "const" and "rtrend", intercept plus trend
for "trend"; restricted terms live inside the EC series instead).

Two readings of multiple EC regressors are supported: one lagged EC term
per cointegrating relation (default), or extra time-lags of the first
relation for users who want EC_{t-1}, EC_{t-2} of a single equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from ._stats import f_sf, t_critical
from .errors import ShapeMismatch
from .johansen import JohansenResult, reduced_rank_regression
from .linreg import RegressionFit, ols_fit
from .series import Dataset, Series

EcTermStyle = Literal["per_relation", "lagged_first_relation"]


@dataclass(frozen=True)
class VecmTerm:
    name: str
    coefficient: float
    standard_error: float
    t_statistic: float
    significant: bool


@dataclass(frozen=True)
class VecmEquation:
    variable: str                      # the differenced left-hand side
    terms: tuple[VecmTerm, ...]        # deterministic, short-run, EC order
    r_squared: float
    adjusted_r_squared: float
    f_statistic: float
    f_p_value: float
    ec_loadings: tuple[float, ...]
    fit: RegressionFit


@dataclass(frozen=True)
class VecmModel:
    rank: int
    p: int
    det_case: str
    alpha: float
    ec_term_style: EcTermStyle
    equations: tuple[VecmEquation, ...]
    residuals: np.ndarray              # (T - p) x k
    regressors: np.ndarray             # shared design, intercept first when present
    regressor_names: tuple[str, ...]
    names: tuple[str, ...]
    years: tuple[int, ...]
    johansen: JohansenResult


@dataclass(frozen=True)
class Correction:
    term: str
    loading: float
    percent: float
    significant: bool


def ec_series(d: Dataset, beta: np.ndarray, det_case: str = "const") -> tuple[Series, ...]:
    """Error-correction series ec^(j)_t = beta_j' y_t over the full sample.

    With a restricted constant or trend the extra beta row applies to a one
    or a position index (1-based), matching the Johansen Z1 convention.
    """
    beta = np.atleast_2d(np.asarray(beta, dtype=float))
    if beta.ndim != 2:
        raise ShapeMismatch("beta must be a matrix of column vectors")
    y = d.to_matrix()
    T, k = y.shape
    rows = beta.shape[0]
    if rows == k + 1 and det_case == "rconst":
        y = np.column_stack([y, np.ones(T)])
    elif rows == k + 1 and det_case == "rtrend":
        y = np.column_stack([y, np.arange(1.0, T + 1.0)])
    elif rows != k:
        raise ShapeMismatch(f"beta has {rows} rows for {k} variables ({det_case!r})")
    ec = y @ beta
    return tuple(
        Series.from_arrays(f"ec{j + 1}", d.years, ec[:, j]) for j in range(beta.shape[1])
    )


def _ec_regressors(
    d: Dataset, beta: np.ndarray, det_case: str, presample: int, r: int, style: EcTermStyle
) -> tuple[np.ndarray, list[str]]:
    """Lagged EC columns aligned with the T - presample regression rows."""
    T = d.n_obs
    if style == "per_relation":
        series = ec_series(d, beta[:, :r], det_case)
        cols = [np.asarray(s.values)[presample - 1:T - 1] for s in series]
        names = [f"ec{j + 1}(t-1)" for j in range(r)]
    else:
        series = ec_series(d, beta[:, :1], det_case)
        vals = np.asarray(series[0].values)
        cols = [vals[presample - m:T - m] for m in range(1, r + 1)]
        names = [f"ec1(t-{m})" for m in range(1, r + 1)]
    return np.column_stack(cols) if cols else np.empty((T - presample, 0)), names


def vecm_fit(
    d: Dataset,
    p: int,
    r: int,
    det_case: str = "const",
    alpha: float = 0.05,
    beta: np.ndarray | None = None,
    ec_term_style: EcTermStyle = "per_relation",
    johansen_result: JohansenResult | None = None,
) -> VecmModel:
    """Estimate the rank-r VECM at lag order p.

    beta defaults to the Johansen eigenvectors at the same (p, det_case);
    r = 0 collapses to a VAR in first differences.

    With ``lagged_first_relation`` the EC lags deepen the presample when
    they reach past the lag order.  That style is only identified when the
    lagged-difference block is absent (p = 1): ec(t-2) differs from ec(t-1)
    by a combination of the t-1 differences, so a full difference block
    makes the design exactly collinear.
    """
    if r < 0 or r > d.n_vars:
        raise ValueError(f"rank must be in 0..{d.n_vars}, got {r}")
    if johansen_result is None and (beta is None and r > 0):
        johansen_result = reduced_rank_regression(d, p, det_case, alpha)
    if beta is None:
        beta = johansen_result.beta if johansen_result is not None else np.empty((d.n_vars, 0))

    y = d.to_matrix()
    T, k = y.shape
    dy_full = np.diff(y, axis=0)
    presample = p
    if ec_term_style == "lagged_first_relation" and r > 0:
        presample = max(p, r)
    N = T - presample
    if N <= 1:
        raise ShapeMismatch(f"too few rows: T={T}, presample={presample}")
    response = dy_full[presample - 1:]

    cols = []
    names: list[str] = []
    if det_case in ("const", "rtrend", "trend"):
        cols.append(np.ones((N, 1)))
        names.append("const")
    if det_case == "trend":
        cols.append(np.arange(presample + 1.0, T + 1.0)[:, None])
        names.append("trend")
    for j in range(1, p):
        cols.append(dy_full[presample - 1 - j:T - 1 - j])
        names += [f"d_{v}({j})" for v in d.names]
    if r > 0:
        ec_cols, ec_names = _ec_regressors(d, beta, det_case, presample, r, ec_term_style)
        cols.append(ec_cols)
        names += ec_names
    if not cols:
        raise ShapeMismatch("empty VECM design: rank 0, no lags, no deterministics")
    X = np.column_stack(cols)

    equations = []
    for i in range(k):
        fit = ols_fit(X, response[:, i])
        crit = t_critical(alpha, fit.n_obs - fit.n_regressors)
        terms = tuple(
            VecmTerm(
                name=names[j],
                coefficient=float(fit.coefficients[j]),
                standard_error=float(fit.standard_errors[j]),
                t_statistic=float(fit.t_statistics[j]),
                significant=bool(abs(fit.t_statistics[j]) > crit),
            )
            for j in range(len(names))
        )
        n_slope = fit.n_regressors - (1 if fit.has_intercept else 0)
        fp = f_sf(fit.f_statistic, n_slope, fit.n_obs - fit.n_regressors) if n_slope > 0 else 1.0
        equations.append(
            VecmEquation(
                variable=f"d_{d.names[i]}",
                terms=terms,
                r_squared=fit.r_squared,
                adjusted_r_squared=fit.adjusted_r_squared,
                f_statistic=fit.f_statistic,
                f_p_value=fp,
                ec_loadings=tuple(float(fit.coefficients[j]) for j in range(len(names) - r, len(names))),
                fit=fit,
            )
        )
    residuals = np.column_stack([eq.fit.residuals for eq in equations])
    return VecmModel(
        rank=r,
        p=p,
        det_case=det_case,
        alpha=alpha,
        ec_term_style=ec_term_style,
        equations=tuple(equations),
        residuals=residuals,
        regressors=X,
        regressor_names=tuple(names),
        names=d.names,
        years=d.years[presample:],
        johansen=johansen_result,
    )


def disequilibrium_correction(model: VecmModel, variable: str | None = None) -> tuple[Correction, ...]:
    """Percent of last period's disequilibrium corrected per EC term.

    Reads the EC loadings of the requested equation (default: the first)
    and reports |loading| x 100 with the loading's sign and significance.
    """
    if model.rank < 1:
        raise ValueError("model has no error-correction terms (rank 0)")
    eq = model.equations[0]
    if variable is not None:
        matches = [e for e in model.equations if e.variable in (variable, f"d_{variable}")]
        if not matches:
            raise ShapeMismatch(f"no equation for {variable!r}")
        eq = matches[0]
    ec_terms = eq.terms[len(eq.terms) - model.rank:]
    return tuple(
        Correction(
            term=t.name,
            loading=t.coefficient,
            percent=abs(t.coefficient) * 100.0,
            significant=t.significant,
        )
        for t in ec_terms
    )
