"""Johansen reduced-rank cointegration analysis.

Estimation concentrates the VECM

    dy_t = alpha beta' z1_t + Psi z2_t + e_t

by partialling z2 (lagged differences plus unrestricted deterministics) out
of dy_t and z1_t (lagged levels plus restricted deterministics), forming the
product-moment matrices S00, S01, S11 of the residuals and solving

    | lambda S11 - S10 S00^-1 S01 | = 0.

The eigenproblem is reduced to a symmetric standard one through a Cholesky
factor of S11, which keeps the eigenvalues real and in [0, 1).  Eigenvectors
are normalized by beta' S11 beta = I and the loadings recovered as
alpha = S01 beta.

Five deterministic cases are supported:

    "none"    no deterministic terms
    "rconst"  constant restricted to the cointegrating relation
    "const"   unrestricted constant (default)
    "rtrend"  unrestricted constant, trend restricted to the relation
    "trend"   unrestricted constant and trend

P-values interpolate the embedded asymptotic quantile tables in
``_johansen_tables`` (see that module for the generation recipe).

References
----------
Johansen, S. 1995. Likelihood-Based Inference in Cointegrated Vector
    Autoregressive Models. Oxford University Press.
MacKinnon, J.G., A. Haug, L. Michelis. 1999. "Numerical distribution
    functions of likelihood ratio tests for cointegration." J. Applied
    Econometrics 14, 563-577.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from ._johansen_tables import MAXEIG_Q, PROBS, TRACE_Q
from .errors import (
    DimensionUnsupported,
    RankOutOfRange,
    SeriesTooShort,
    SingularMomentMatrix,
    ZeroNormalizationCoefficient,
)
from .series import Dataset

DetCase = Literal["none", "rconst", "const", "rtrend", "trend"]
DET_CASES = ("none", "rconst", "const", "rtrend", "trend")

TestKind = Literal["trace", "maxeig"]


@dataclass(frozen=True)
class RankTestRow:
    rank: int                 # hypothesized rank under the null
    eigenvalue: float         # lambda_{rank+1}, the next eigenvalue
    statistic: float
    p_value: float
    critical_value_5pct: float


@dataclass(frozen=True)
class JohansenResult:
    eigenvalues: tuple[float, ...]        # descending, one per variable
    trace_rows: tuple[RankTestRow, ...]
    max_eigen_rows: tuple[RankTestRow, ...]
    beta: np.ndarray                      # columns are cointegrating vectors
    alpha: np.ndarray                     # k x k loading columns
    beta_labels: tuple[str, ...]          # row labels of beta
    names: tuple[str, ...]
    selected_rank: int                    # trace decision at construction alpha
    det_case: DetCase
    T_effective: int
    p: int
    alpha_level: float


@dataclass(frozen=True)
class RankDecision:
    trace_rank: int
    max_eigen_rank: int
    alpha: float
    table_text: str


@dataclass(frozen=True)
class LongRunEquation:
    normalized_on: str
    coefficients: dict[str, float]        # right-hand-side terms
    equation: str


def _check_case(det_case: str) -> str:
    if det_case not in DET_CASES:
        raise ValueError(f"unknown deterministic case {det_case!r}; expected one of {DET_CASES}")
    return det_case


def _resid_on(Y: np.ndarray, X: np.ndarray) -> np.ndarray:
    if X.shape[1] == 0:
        return Y.copy()
    coef, _, rank, _ = np.linalg.lstsq(X, Y, rcond=None)
    if rank < X.shape[1]:
        raise SingularMomentMatrix("collinear short-run regressors")
    return Y - X @ coef


def _moment_matrices(d: Dataset, p: int, det_case: str):
    """Concentrated residual moment matrices (S00, S01, S11) plus metadata."""
    y = d.to_matrix()
    T, k = y.shape
    N = T - p
    n_det_z1 = 1 if det_case in ("rconst", "rtrend") else 0
    n_det_z2 = {"none": 0, "rconst": 0, "const": 1, "rtrend": 1, "trend": 2}[det_case]
    needed = k + n_det_z1 + n_det_z2 + k * (p - 1) + 2
    if N < needed:
        raise SeriesTooShort(f"Johansen with p={p}, k={k} needs T - p >= {needed}, have {N}")

    dy_full = np.diff(y, axis=0)
    Z0 = dy_full[p - 1:]                       # dy_t, rows t = p+1..T
    Z1 = y[p - 1:T - 1]                        # y_{t-1}
    positions = np.arange(p + 1, T + 1, dtype=float)
    if det_case == "rconst":
        Z1 = np.column_stack([Z1, np.ones(N)])
    elif det_case == "rtrend":
        Z1 = np.column_stack([Z1, positions - 1.0])   # trend at t-1, like the level
    z2_cols = []
    if det_case in ("const", "rtrend"):
        z2_cols.append(np.ones((N, 1)))
    elif det_case == "trend":
        z2_cols.append(np.ones((N, 1)))
        z2_cols.append(positions[:, None])
    z2_cols += [dy_full[p - 1 - j:T - 1 - j] for j in range(1, p)]
    Z2 = np.column_stack(z2_cols) if z2_cols else np.empty((N, 0))

    R0 = _resid_on(Z0, Z2)
    R1 = _resid_on(Z1, Z2)
    S00 = R0.T @ R0 / N
    S01 = R0.T @ R1 / N
    S11 = R1.T @ R1 / N
    return S00, S01, S11, N, R0, R1


def reduced_rank_regression(
    d: Dataset, p: int, det_case: DetCase = "const", alpha: float = 0.05
) -> JohansenResult:
    """Solve the Johansen eigenproblem and assemble both rank test tables.

    ``p`` is the VAR lag order in levels, so p - 1 lagged differences enter
    the short-run block.  T_effective = T - p observations are used.
    """
    _check_case(det_case)
    if p < 1:
        raise ValueError(f"lag order must be >= 1, got {p}")
    S00, S01, S11, N, _, _ = _moment_matrices(d, p, det_case)
    k = d.n_vars
    try:
        L = np.linalg.cholesky(S11)
        S00_inv_S01 = np.linalg.solve(S00, S01)
    except np.linalg.LinAlgError as exc:
        raise SingularMomentMatrix(str(exc)) from exc
    Linv = np.linalg.inv(L)
    M = Linv @ S01.T @ S00_inv_S01 @ Linv.T
    lam_all, V = np.linalg.eigh((M + M.T) / 2.0)
    order = np.argsort(lam_all)[::-1]
    lam = np.clip(lam_all[order][:k], 0.0, 1.0 - 1e-12)
    beta = (Linv.T @ V[:, order])[:, :k]
    # sign convention: positive coefficient on the first variable when nonzero
    for j in range(beta.shape[1]):
        lead = beta[0, j]
        if lead != 0.0:
            beta[:, j] *= math.copysign(1.0, lead)
    alpha_mat = S01 @ beta

    labels = list(d.names)
    if det_case == "rconst":
        labels.append("const")
    elif det_case == "rtrend":
        labels.append("trend")

    trace_rows = []
    maxeig_rows = []
    for r in range(k):
        tr = -N * float(np.log1p(-lam[r:]).sum())
        me = -N * float(np.log1p(-lam[r]))
        trace_rows.append(RankTestRow(
            rank=r,
            eigenvalue=float(lam[r]),
            statistic=tr,
            p_value=johansen_pvalue(tr, k - r, det_case, "trace"),
            critical_value_5pct=johansen_critical_value(0.05, k - r, det_case, "trace"),
        ))
        maxeig_rows.append(RankTestRow(
            rank=r,
            eigenvalue=float(lam[r]),
            statistic=me,
            p_value=johansen_pvalue(me, k - r, det_case, "maxeig"),
            critical_value_5pct=johansen_critical_value(0.05, k - r, det_case, "maxeig"),
        ))
    selected = k
    for row in trace_rows:
        if row.p_value > alpha:
            selected = row.rank
            break
    return JohansenResult(
        eigenvalues=tuple(float(v) for v in lam),
        trace_rows=tuple(trace_rows),
        max_eigen_rows=tuple(maxeig_rows),
        beta=beta,
        alpha=alpha_mat,
        beta_labels=tuple(labels),
        names=d.names,
        selected_rank=selected,
        det_case=det_case,
        T_effective=N,
        p=p,
        alpha_level=alpha,
    )


def trace_statistic(result: JohansenResult, r: int) -> float:
    """-T sum_{i>r} log(1 - lambda_i)."""
    k = len(result.eigenvalues)
    if not 0 <= r < k:
        raise RankOutOfRange(f"rank {r} outside 0..{k - 1}")
    lam = np.asarray(result.eigenvalues[r:])
    return -result.T_effective * float(np.log1p(-lam).sum())


def max_eigen_statistic(result: JohansenResult, r: int) -> float:
    """-T log(1 - lambda_{r+1})."""
    k = len(result.eigenvalues)
    if not 0 <= r < k:
        raise RankOutOfRange(f"rank {r} outside 0..{k - 1}")
    return -result.T_effective * float(np.log1p(-result.eigenvalues[r]))


def _table_for(det_case: str, which: TestKind) -> dict[int, tuple[float, ...]]:
    _check_case(det_case)
    if which == "trace":
        return TRACE_Q[det_case]
    if which == "maxeig":
        return MAXEIG_Q[det_case]
    raise ValueError(f"unknown test kind {which!r}")


def johansen_pvalue(statistic: float, k_minus_r: int, det_case: DetCase, which: TestKind) -> float:
    """Asymptotic p-value by interpolation in the embedded quantile tables.

    Below the lowest tabulated quantile the CDF is taken linear through the
    origin; above the highest one the tail decays exponentially at the rate
    implied by the last tabulated decade.
    """
    table = _table_for(det_case, which)
    if k_minus_r not in table:
        raise DimensionUnsupported(f"no table for k - r = {k_minus_r} (supported 1..{max(table)})")
    if statistic < 0 or not math.isfinite(statistic):
        raise ValueError(f"statistic must be finite and nonnegative, got {statistic}")
    qs = np.asarray(table[k_minus_r])
    probs = np.asarray(PROBS)
    if statistic <= qs[0]:
        cdf = probs[0] * (statistic / qs[0]) if qs[0] > 0 else probs[0]
        return float(1.0 - cdf)
    if statistic >= qs[-1]:
        p_hi = 1.0 - probs[-1]
        j = len(qs) - 2
        while j > 0 and not qs[j] < qs[-1]:
            j -= 1
        p_j = 1.0 - probs[j]
        scale = (qs[-1] - qs[j]) / math.log(p_j / p_hi)
        return float(p_hi * math.exp(-(statistic - qs[-1]) / scale))
    return float(1.0 - np.interp(statistic, qs, probs))


def johansen_critical_value(
    alpha: float, k_minus_r: int, det_case: DetCase, which: TestKind
) -> float:
    """Quantile of the asymptotic null at upper-tail probability alpha."""
    table = _table_for(det_case, which)
    if k_minus_r not in table:
        raise DimensionUnsupported(f"no table for k - r = {k_minus_r} (supported 1..{max(table)})")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    qs = np.asarray(table[k_minus_r])
    probs = np.asarray(PROBS)
    return float(np.interp(1.0 - alpha, probs, qs))


def _rank_from_rows(rows: tuple[RankTestRow, ...], alpha: float, k: int) -> int:
    for row in rows:
        if row.p_value > alpha:
            return row.rank
    return k


def rank_decision(result: JohansenResult, alpha: float = 0.05) -> RankDecision:
    """Sequential rank tests from r = 0 upward, stopping at first non-rejection."""
    k = len(result.eigenvalues)
    trace_rank = _rank_from_rows(result.trace_rows, alpha, k)
    maxeig_rank = _rank_from_rows(result.max_eigen_rows, alpha, k)
    lines = [
        f"{'Rank':<12}{'Eigenvalue':>12}{'Trace':>12}{'p-value':>10}{'Max-Eigen':>12}{'p-value':>10}"
    ]
    for tr_row, me_row in zip(result.trace_rows, result.max_eigen_rows):
        label = "None" if tr_row.rank == 0 else f"At most {tr_row.rank}"
        star = "*" if tr_row.p_value <= alpha else ""
        lines.append(
            f"{label + star:<12}{tr_row.eigenvalue:>12.6f}{tr_row.statistic:>12.5f}"
            f"{tr_row.p_value:>10.4f}{me_row.statistic:>12.5f}{me_row.p_value:>10.4f}"
        )
    lines.append(f"Trace rank: {trace_rank}   Max-eigen rank: {maxeig_rank}   (alpha={alpha:g})")
    return RankDecision(trace_rank, maxeig_rank, alpha, "\n".join(lines))


def normalize_long_run(result: JohansenResult, on: str, index: int = 0) -> LongRunEquation:
    """Express one cointegrating vector as a long-run equation for ``on``.

    The chosen beta column is divided by the coefficient of the
    normalization variable and the remaining terms move to the right-hand
    side with flipped signs.
    """
    k = result.beta.shape[1]
    if not 0 <= index < k:
        raise RankOutOfRange(f"cointegration index {index} outside 0..{k - 1}")
    if on not in result.beta_labels:
        raise ZeroNormalizationCoefficient(f"variable {on!r} not in {result.beta_labels}")
    col = result.beta[:, index]
    pos = result.beta_labels.index(on)
    pivot = col[pos]
    if abs(pivot) <= 1e-10 * float(np.linalg.norm(col)):
        raise ZeroNormalizationCoefficient(
            f"coefficient of {on!r} in column {index} is numerically zero"
        )
    normalized = col / pivot
    coefficients = {
        label: float(-normalized[i])
        for i, label in enumerate(result.beta_labels)
        if i != pos
    }
    terms = []
    for label, value in coefficients.items():
        body = f"{abs(value):.6f}" if label in ("const", "trend") else f"{abs(value):.6f} * {label}"
        if label == "trend":
            body += " * t"
        if not terms:
            terms.append(body if value >= 0 else f"-{body}")
        else:
            terms.append(f"{'+' if value >= 0 else '-'} {body}")
    return LongRunEquation(on, coefficients, f"{on} = " + " ".join(terms))
