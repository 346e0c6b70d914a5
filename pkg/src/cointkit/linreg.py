"""Ordinary least squares core shared by every test in the pipeline.

The solver goes through a QR decomposition for conditioning; the degenerate
T ~ 25 macro panels this package targets make near-collinear designs a real
possibility, so rank is checked on the R factor rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .errors import RankDeficient, ShapeMismatch, SingularCovariance

RANK_RTOL = 1e-10


@dataclass(frozen=True)
class RegressionFit:
    """Per-equation OLS output: point estimates, inference and fit statistics."""

    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_statistics: np.ndarray
    residuals: np.ndarray
    fitted: np.ndarray
    r_squared: float
    adjusted_r_squared: float
    f_statistic: float
    sigma2: float
    n_obs: int
    n_regressors: int
    has_intercept: bool


def _detect_intercept(X: np.ndarray) -> bool:
    """True when some column is a nonzero constant (spans the intercept)."""
    col_range = X.max(axis=0) - X.min(axis=0)
    col_scale = np.abs(X).max(axis=0)
    return bool(np.any((col_range <= 1e-12 * np.maximum(col_scale, 1.0)) & (col_scale > 0)))


def ols_fit(X: np.ndarray, y: np.ndarray) -> RegressionFit:
    """Least-squares fit of y on the columns of X.

    Coefficient covariance is sigma2 * (X'X)^-1 with sigma2 = SSR / (n - k).
    Raises RankDeficient when the R factor's diagonal collapses below
    RANK_RTOL relative to its largest entry, ShapeMismatch on bad input.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float).ravel()
    if X.ndim != 2:
        raise ShapeMismatch(f"design must be 2-d, got {X.ndim}-d")
    n, k = X.shape
    if n != y.shape[0]:
        raise ShapeMismatch(f"{n} design rows vs {y.shape[0]} responses")
    if n <= k:
        raise ShapeMismatch(f"need more observations than regressors ({n} <= {k})")
    if k == 0:
        raise ShapeMismatch("empty design matrix")

    Q, R = np.linalg.qr(X)
    diag = np.abs(np.diag(R))
    if diag.min() <= RANK_RTOL * max(diag.max(), 1e-300):
        raise RankDeficient(f"design matrix is rank deficient (min |R_ii| = {diag.min():.3e})")
    beta = solve_triangular(R, Q.T @ y)
    fitted = X @ beta
    resid = y - fitted
    ssr = float(resid @ resid)
    sigma2 = ssr / (n - k)

    Rinv = solve_triangular(R, np.eye(k))
    xtx_inv_diag = np.einsum("ij,ij->i", Rinv, Rinv)
    se = np.sqrt(sigma2 * xtx_inv_diag)
    with np.errstate(divide="ignore", invalid="ignore"):
        tstats = np.where(se > 0, beta / se, np.inf * np.sign(beta))

    has_intercept = _detect_intercept(X)
    if has_intercept:
        sst = float(np.sum((y - y.mean()) ** 2))
        n_slope = k - 1
    else:
        sst = float(y @ y)
        n_slope = k
    r2 = 1.0 - ssr / sst if sst > 0 else 1.0
    dof = n - k
    adj = 1.0 - (1.0 - r2) * (n - 1) / dof if has_intercept else 1.0 - (1.0 - r2) * n / dof
    if n_slope > 0 and r2 < 1.0:
        fstat = (r2 / n_slope) / ((1.0 - r2) / dof)
    else:
        fstat = np.inf if r2 >= 1.0 and n_slope > 0 else 0.0
    return RegressionFit(
        coefficients=beta,
        standard_errors=se,
        t_statistics=tstats,
        residuals=resid,
        fitted=fitted,
        r_squared=r2,
        adjusted_r_squared=adj,
        f_statistic=float(fstat),
        sigma2=sigma2,
        n_obs=n,
        n_regressors=k,
        has_intercept=has_intercept,
    )


def residual_covariance(
    residuals: np.ndarray, dof_adjust: bool = False, n_regressors: int = 0
) -> np.ndarray:
    """k x k residual covariance, divisor T (or T - n_regressors when adjusted).

    Johansen-style system computations use the 1/T convention; per-equation
    standard errors want the degrees-of-freedom adjusted one, hence the flag.
    """
    U = np.asarray(residuals, dtype=float)
    if U.ndim == 1:
        U = U[:, None]
    T = U.shape[0]
    if T < 2:
        raise ShapeMismatch(f"need at least 2 residual rows, got {T}")
    divisor = T - n_regressors if dof_adjust else T
    if divisor <= 0:
        raise ShapeMismatch(f"nonpositive divisor T={T}, m={n_regressors}")
    return U.T @ U / divisor


def gaussian_loglik(sigma: np.ndarray, T: int) -> float:
    """Gaussian system log-likelihood from a residual covariance.

    ll = -(T k / 2)(1 + log 2 pi) - (T / 2) log det Sigma.
    """
    S = np.atleast_2d(np.asarray(sigma, dtype=float))
    k = S.shape[0]
    if S.shape != (k, k):
        raise ShapeMismatch(f"covariance must be square, got {S.shape}")
    sign, logdet = np.linalg.slogdet(S)
    if sign <= 0 or not np.isfinite(logdet):
        raise SingularCovariance("covariance is not positive definite")
    return float(-(T * k / 2.0) * (1.0 + np.log(2.0 * np.pi)) - (T / 2.0) * logdet)
