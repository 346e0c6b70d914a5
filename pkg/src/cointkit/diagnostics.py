"""Post-estimation residual checks: system heteroskedasticity and normality.

The heteroskedasticity check is a White-type system test without cross
terms: every one of the k(k+1)/2 residual cross-products is regressed on an
intercept plus the levels and squares of the system regressors, and the
statistic is T times the sum of the auxiliary R-squared values, referred to
a chi-square with (regressor-set size) x k(k+1)/2 degrees of freedom.

The normality check orthogonalizes the residuals with the inverse Cholesky
factor of their covariance and forms per-component and joint Jarque-Bera
statistics:

    skew chi2_j = T S_j^2 / 6        (df 1 each, df k jointly)
    kurt chi2_j = T (K_j - 3)^2 / 24 (df 1 each, df k jointly)
    JB_j        = skew chi2_j + kurt chi2_j  (df 2 each, df 2k jointly)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from ._stats import chi2_sf
from .errors import RankDeficient, ShapeMismatch, SingularCovariance
from .linreg import ols_fit


@dataclass(frozen=True)
class HeteroskedasticityResult:
    chi_sq: float
    df: int
    p_value: float
    verdict: Literal["homoscedastic", "heteroscedastic"]
    alpha: float
    n_auxiliary: int


@dataclass(frozen=True)
class ComponentNormality:
    component: int
    skewness: float
    skew_chi_sq: float
    skew_p: float
    kurtosis: float
    kurt_chi_sq: float
    kurt_p: float
    jarque_bera: float
    jb_p: float


@dataclass(frozen=True)
class NormalityResult:
    components: tuple[ComponentNormality, ...]
    joint_skew_chi_sq: float
    joint_skew_p: float
    joint_kurt_chi_sq: float
    joint_kurt_p: float
    joint_jarque_bera: float
    joint_jb_p: float
    df_joint_skew: int
    df_joint_kurt: int
    df_joint_jb: int
    n_obs: int


def white_system_test(
    residuals: np.ndarray, regressors: np.ndarray, alpha: float = 0.05
) -> HeteroskedasticityResult:
    """White-type heteroskedasticity test for a k-equation system.

    ``regressors`` is the shared design of the estimated system; constant
    columns are dropped before building levels and squares.
    """
    U = np.atleast_2d(np.asarray(residuals, dtype=float))
    if U.ndim != 2:
        raise ShapeMismatch("residuals must be 2-d")
    if U.shape[0] < U.shape[1]:
        U = U.T
    X = np.asarray(regressors, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    T, k = U.shape
    if X.shape[0] != T:
        raise ShapeMismatch(f"{T} residual rows vs {X.shape[0]} regressor rows")

    keep = np.ptp(X, axis=0) > 1e-12 * np.maximum(np.abs(X).max(axis=0), 1.0)
    Z = X[:, keep]
    m = Z.shape[1]
    if m == 0:
        raise ShapeMismatch("no non-constant regressors to test against")
    aux = np.column_stack([np.ones(T), Z, Z**2])
    n_aux = 2 * m
    if T <= aux.shape[1]:
        raise ShapeMismatch(f"too few rows ({T}) for {aux.shape[1]} auxiliary regressors")

    stat = 0.0
    n_pairs = 0
    for i in range(k):
        for j in range(i, k):
            y = U[:, i] * U[:, j]
            if float(np.ptp(y)) <= 1e-14 * max(float(np.abs(y).max()), 1e-300):
                raise RankDeficient(f"degenerate auxiliary regression for pair ({i}, {j})")
            fit = ols_fit(aux, y)
            stat += T * fit.r_squared
            n_pairs += 1
    df = n_aux * n_pairs
    p = chi2_sf(stat, df)
    return HeteroskedasticityResult(
        chi_sq=float(stat),
        df=df,
        p_value=p,
        verdict="heteroscedastic" if p <= alpha else "homoscedastic",
        alpha=alpha,
        n_auxiliary=n_aux,
    )


def multivariate_jb(
    residuals: np.ndarray, orthogonalization: Literal["cholesky"] = "cholesky"
) -> NormalityResult:
    """Orthogonalized multivariate Jarque-Bera test.

    Component ordering matters under Cholesky orthogonalization and follows
    the column order of the residual block.
    """
    if orthogonalization != "cholesky":
        raise ValueError(f"unsupported orthogonalization {orthogonalization!r}")
    U = np.asarray(residuals, dtype=float)
    if U.ndim == 1:
        U = U[:, None]
    T, k = U.shape
    if T < 8:
        raise ShapeMismatch(f"need at least 8 rows, got {T}")
    U = U - U.mean(axis=0)
    sigma = U.T @ U / T
    try:
        L = np.linalg.cholesky(sigma)
    except np.linalg.LinAlgError as exc:
        raise SingularCovariance("residual covariance is not positive definite") from exc
    diag = np.diag(L)
    if diag.min() <= 1e-6 * diag.max():
        raise SingularCovariance("residual covariance is numerically singular")
    E = np.linalg.solve(L, U.T).T      # rows e_t = L^-1 u_t, unit covariance

    components = []
    joint_skew = joint_kurt = 0.0
    for j in range(k):
        e = E[:, j]
        s = float(np.mean(e**3))
        kt = float(np.mean(e**4))
        skew_stat = T * s**2 / 6.0
        kurt_stat = T * (kt - 3.0) ** 2 / 24.0
        jb = skew_stat + kurt_stat
        components.append(
            ComponentNormality(
                component=j + 1,
                skewness=s,
                skew_chi_sq=skew_stat,
                skew_p=chi2_sf(skew_stat, 1),
                kurtosis=kt,
                kurt_chi_sq=kurt_stat,
                kurt_p=chi2_sf(kurt_stat, 1),
                jarque_bera=jb,
                jb_p=chi2_sf(jb, 2),
            )
        )
        joint_skew += skew_stat
        joint_kurt += kurt_stat
    joint_jb = joint_skew + joint_kurt
    return NormalityResult(
        components=tuple(components),
        joint_skew_chi_sq=joint_skew,
        joint_skew_p=chi2_sf(joint_skew, k),
        joint_kurt_chi_sq=joint_kurt,
        joint_kurt_p=chi2_sf(joint_kurt, k),
        joint_jarque_bera=joint_jb,
        joint_jb_p=chi2_sf(joint_jb, 2 * k),
        df_joint_skew=k,
        df_joint_kurt=k,
        df_joint_jb=2 * k,
        n_obs=T,
    )
