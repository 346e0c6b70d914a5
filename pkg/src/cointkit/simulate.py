"""Seeded data-generating processes and Monte Carlo drivers.

Three process families cover the validation needs of the whole pipeline:

    random_walk          y_t = y_{t-1} + e_t
    stationary_ar        y_t = phi y_{t-1} + e_t
    cointegrated_system  dy_t = alpha beta' y_{t-1} + e_t

All randomness flows through the package's own generator (see ``rng``), so
a DgpSpec with a fixed seed reproduces bit-identical datasets anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import CointkitError, ShapeMismatch, UnstableSpec
from .rng import Xoshiro256StarStar, derive_seed
from .series import Dataset

DGP_KINDS = ("random_walk", "stationary_ar", "cointegrated_system")


@dataclass(frozen=True)
class DgpSpec:
    kind: str
    k: int
    T: int
    seed: int
    phi: float = 0.5
    loading: tuple[tuple[float, ...], ...] | None = None       # alpha, k x r
    cointegration: tuple[tuple[float, ...], ...] | None = None  # beta, k x r
    innovation_cov: tuple[tuple[float, ...], ...] | None = None
    start_year: int = 1

    def __post_init__(self):
        if self.kind not in DGP_KINDS:
            raise UnstableSpec(f"unknown DGP kind {self.kind!r}")
        if self.k < 1 or self.T < 2:
            raise UnstableSpec(f"need k >= 1 and T >= 2, got k={self.k}, T={self.T}")


def _as_matrix(rows, k: int, what: str) -> np.ndarray:
    m = np.asarray(rows, dtype=float)
    if m.ndim != 2 or m.shape[0] != k:
        raise ShapeMismatch(f"{what} must be k x r with k={k}, got {m.shape}")
    return m


def _check_cointegrated(spec: DgpSpec) -> tuple[np.ndarray, np.ndarray]:
    if spec.loading is None or spec.cointegration is None:
        raise UnstableSpec("cointegrated_system needs loading and cointegration matrices")
    a = _as_matrix(spec.loading, spec.k, "loading")
    b = _as_matrix(spec.cointegration, spec.k, "cointegration")
    if a.shape != b.shape:
        raise ShapeMismatch(f"loading {a.shape} vs cointegration {b.shape}")
    r = b.shape[1]
    if not 1 <= r < spec.k:
        raise UnstableSpec(f"need 1 <= rank < k, got rank {r}, k {spec.k}")
    if np.linalg.matrix_rank(b) < r:
        raise UnstableSpec("cointegration matrix is rank deficient")
    # stationary roots: eigenvalues of I_r + beta' alpha strictly inside the unit circle
    roots = np.linalg.eigvals(np.eye(r) + b.T @ a)
    if np.any(np.abs(roots) >= 1.0 - 1e-8):
        raise UnstableSpec(f"unstable error-correction dynamics, roots {roots}")
    return a, b


def _innovations(spec: DgpSpec, gen: Xoshiro256StarStar) -> np.ndarray:
    z = np.array(gen.normals(spec.T * spec.k), dtype=float).reshape(spec.T, spec.k)
    if spec.innovation_cov is None:
        return z
    cov = np.asarray(spec.innovation_cov, dtype=float)
    if cov.shape != (spec.k, spec.k):
        raise ShapeMismatch(f"innovation covariance must be {spec.k} x {spec.k}, got {cov.shape}")
    if np.allclose(cov, 0.0):
        return np.zeros_like(z)
    try:
        L = np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        # allow positive semidefinite covariances (e.g. degenerate noise)
        w, V = np.linalg.eigh((cov + cov.T) / 2.0)
        if np.any(w < -1e-10):
            raise UnstableSpec("innovation covariance is not positive semidefinite")
        L = V @ np.diag(np.sqrt(np.clip(w, 0.0, None)))
    return z @ L.T


def generate(spec: DgpSpec) -> Dataset:
    """Simulate one dataset; deterministic given the spec (seed included)."""
    gen = Xoshiro256StarStar(spec.seed)
    eps = _innovations(spec, gen)
    y = np.zeros((spec.T, spec.k))
    if spec.kind == "random_walk":
        y = np.cumsum(eps, axis=0)
    elif spec.kind == "stationary_ar":
        if abs(spec.phi) >= 1.0:
            raise UnstableSpec(f"|phi| must be < 1, got {spec.phi}")
        prev = np.zeros(spec.k)
        for t in range(spec.T):
            prev = spec.phi * prev + eps[t]
            y[t] = prev
    else:
        a, b = _check_cointegrated(spec)
        prev = np.zeros(spec.k)
        for t in range(spec.T):
            prev = prev + a @ (b.T @ prev) + eps[t]
            y[t] = prev
    years = range(spec.start_year, spec.start_year + spec.T)
    names = [f"y{i + 1}" for i in range(spec.k)]
    return Dataset.from_matrix(names, years, y)


@dataclass(frozen=True)
class RejectionSummary:
    rate: float
    rejections: int
    completed: int
    failures: int
    reps: int
    alpha: float
    failure_messages: tuple[str, ...] = field(default_factory=tuple)


def rejection_rate(
    pvalue_fn: Callable[[Dataset], float],
    spec: DgpSpec,
    reps: int,
    alpha: float = 0.05,
) -> RejectionSummary:
    """Fraction of replications in which ``pvalue_fn`` rejects at ``alpha``.

    Replication j runs on the dataset generated with derive_seed(spec.seed, j).
    Replications that raise a toolkit or linear-algebra error are counted as
    failures and excluded from the denominator, never silently dropped.
    """
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")
    rejections = 0
    completed = 0
    failures: list[str] = []
    for j in range(reps):
        child = DgpSpec(
            kind=spec.kind,
            k=spec.k,
            T=spec.T,
            seed=derive_seed(spec.seed, j),
            phi=spec.phi,
            loading=spec.loading,
            cointegration=spec.cointegration,
            innovation_cov=spec.innovation_cov,
            start_year=spec.start_year,
        )
        try:
            p = pvalue_fn(generate(child))
        except (CointkitError, np.linalg.LinAlgError) as exc:
            failures.append(f"rep {j}: {exc}")
            continue
        completed += 1
        if p <= alpha:
            rejections += 1
    rate = rejections / completed if completed else float("nan")
    return RejectionSummary(
        rate=rate,
        rejections=rejections,
        completed=completed,
        failures=len(failures),
        reps=reps,
        alpha=alpha,
        failure_messages=tuple(failures[:20]),
    )
