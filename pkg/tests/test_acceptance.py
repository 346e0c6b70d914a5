"""Acceptance suite: one test per release criterion, full stated scale.

Each test prints a PASS line with the measured quantities when it
succeeds, so `pytest -s tests/test_acceptance.py` doubles as the
acceptance report.
"""

import json
import re
import shutil
import time
from pathlib import Path

import numpy as np
import pytest

from cointkit.adf import adf_test
from cointkit.cli import main
from cointkit.diagnostics import multivariate_jb, white_system_test
from cointkit.johansen import (
    JohansenResult,
    RankTestRow,
    max_eigen_statistic,
    rank_decision,
    reduced_rank_regression,
    trace_statistic,
)
from cointkit.linreg import ols_fit
from cointkit.rng import derive_seed
from cointkit.simulate import DgpSpec, generate, rejection_rate
from cointkit.varsel import var_fit
from cointkit.vecm import vecm_fit

DATA = Path(__file__).parent / "data"


def gaussian_elimination_solve(A, b):
    """Row-reduction with partial pivoting, no numpy.linalg."""
    n = A.shape[0]
    M = np.column_stack([A.astype(float).copy(), np.asarray(b, dtype=float).copy()])
    for col in range(n):
        pivot = col + int(np.argmax(np.abs(M[col:, col])))
        if M[pivot, col] == 0.0:
            raise ZeroDivisionError("singular")
        if pivot != col:
            M[[col, pivot]] = M[[pivot, col]]
        M[col] = M[col] / M[col, col]
        for row in range(n):
            if row != col:
                M[row] = M[row] - M[row, col] * M[col]
    return M[:, n]


def test_criterion_1_ols_matches_normal_equations_oracle():
    """100 random systems: coefficients, SEs, R^2 vs an independent solver."""
    start = time.monotonic()
    gen = np.random.default_rng(11001)
    checked = 0
    while checked < 100:
        n = int(gen.integers(8, 51))
        k = int(gen.integers(2, 7))
        if n <= k + 2:
            continue
        X = np.column_stack([np.ones(n), gen.standard_normal((n, k - 1))])
        beta_true = gen.uniform(-3, 3, size=k)
        y = X @ beta_true + gen.standard_normal(n)
        fit = ols_fit(X, y)

        coef = gaussian_elimination_solve(X.T @ X, X.T @ y)
        resid = y - X @ coef
        sigma2 = float(resid @ resid) / (n - k)
        xtx_inv = np.column_stack(
            [gaussian_elimination_solve(X.T @ X, np.eye(k)[:, j]) for j in range(k)]
        )
        se = np.sqrt(sigma2 * np.diag(xtx_inv))
        sst = float(np.sum((y - y.mean()) ** 2))
        r2 = 1.0 - float(resid @ resid) / sst

        np.testing.assert_allclose(fit.coefficients, coef, rtol=1e-10, atol=1e-13)
        np.testing.assert_allclose(fit.standard_errors, se, rtol=1e-10, atol=1e-13)
        assert fit.r_squared == pytest.approx(r2, rel=1e-10)
        checked += 1
    elapsed = time.monotonic() - start
    assert elapsed < 5.0
    print(f"\nPASS criterion 1: OLS oracle equivalence on {checked} systems "
          f"to 1e-10 in {elapsed:.2f}s")


def test_criterion_2_formula_identities():
    """Trace/max-eigen telescoping, JB component formulas, Table-style anchor."""
    gen = np.random.default_rng(22002)
    for _ in range(200):
        k = int(gen.integers(2, 9))
        lam = np.sort(gen.uniform(0.0, 0.97, size=k))[::-1]
        T = int(gen.integers(20, 400))
        rows = []
        for r in range(k):
            tr = -T * float(np.log1p(-lam[r:]).sum())
            me = -T * float(np.log1p(-lam[r]))
            rows.append(RankTestRow(r, float(lam[r]), tr, 0.5, 0.0))
        names = tuple(f"v{i}" for i in range(k))
        res = JohansenResult(
            eigenvalues=tuple(lam), trace_rows=tuple(rows), max_eigen_rows=tuple(rows),
            beta=np.eye(k), alpha=np.eye(k), beta_labels=names, names=names,
            selected_rank=0, det_case="const", T_effective=T, p=1, alpha_level=0.05,
        )
        for r in range(k - 1):
            gap = trace_statistic(res, r) - trace_statistic(res, r + 1)
            assert gap == pytest.approx(max_eigen_statistic(res, r), abs=1e-9)

    U = gen.standard_normal((23, 4)) ** 3
    jb = multivariate_jb(U)
    for comp in jb.components:
        assert comp.skew_chi_sq == pytest.approx(23 * comp.skewness**2 / 6, abs=1e-8)
        assert comp.kurt_chi_sq == pytest.approx(23 * (comp.kurtosis - 3) ** 2 / 24, abs=1e-8)

    anchor = 23 * (-0.767024) ** 2 / 6
    assert anchor == pytest.approx(2.255247, abs=1e-3)
    print(f"\nPASS criterion 2: statistic identities hold; skewness anchor "
          f"{anchor:.6f} vs 2.255247")


def test_criterion_3_adf_size_and_power():
    """Size on 1000 random walks (T=100) and power on AR(0.5) (T=200)."""
    start = time.monotonic()
    size_spec = DgpSpec(kind="random_walk", k=1, T=100, seed=33003)
    size = rejection_rate(
        lambda d: adf_test(d.variables[0], "constant", lags=0).p_value,
        size_spec, reps=1000, alpha=0.05,
    )
    assert size.failures == 0
    assert 0.03 <= size.rate <= 0.07

    power_spec = DgpSpec(kind="stationary_ar", k=1, T=200, seed=33004, phi=0.5)
    power = rejection_rate(
        lambda d: adf_test(d.variables[0], "constant", lags=0).p_value,
        power_spec, reps=1000, alpha=0.05,
    )
    assert power.rate >= 0.90
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"\nPASS criterion 3: ADF size {size.rate:.3f} in [0.03, 0.07], "
          f"power {power.rate:.3f} >= 0.90 in {elapsed:.1f}s")


def test_criterion_4_johansen_rank_recovery():
    """Trace-based rank selection on a rank-1 system and on independent walks.

    Both processes are driftless, so the tests run under the matching
    "none" deterministic case.
    """
    start = time.monotonic()
    rank1 = 0
    reps = 1000
    for j in range(reps):
        spec = DgpSpec(
            kind="cointegrated_system", k=2, T=200, seed=derive_seed(44004, j),
            loading=((-0.3,), (0.0,)), cointegration=((1.0,), (-1.0,)),
        )
        res = reduced_rank_regression(generate(spec), 1, "none", 0.05)
        if rank_decision(res, 0.05).trace_rank == 1:
            rank1 += 1
    share_rank1 = rank1 / reps
    assert share_rank1 >= 0.80

    rank0 = 0
    for j in range(reps):
        spec = DgpSpec(kind="random_walk", k=2, T=200, seed=derive_seed(44005, j))
        res = reduced_rank_regression(generate(spec), 1, "none", 0.05)
        if rank_decision(res, 0.05).trace_rank == 0:
            rank0 += 1
    share_rank0 = rank0 / reps
    assert share_rank0 >= 0.88
    elapsed = time.monotonic() - start
    assert elapsed < 300.0
    print(f"\nPASS criterion 4: rank-1 recovery {share_rank1:.3f} >= 0.80, "
          f"rank-0 retention {share_rank0:.3f} >= 0.88 in {elapsed:.1f}s")


def test_criterion_5_vecm_loading_consistency():
    """EC loading within 2 estimated SEs of the true -0.3 in >= 90% of reps."""
    hits = 0
    reps = 500
    for j in range(reps):
        spec = DgpSpec(
            kind="cointegrated_system", k=2, T=400, seed=derive_seed(55005, j),
            loading=((-0.3,), (0.0,)), cointegration=((1.0,), (-1.0,)),
        )
        d = generate(spec)
        res = reduced_rank_regression(d, 1, "none")
        beta_norm = res.beta[:, :1] / res.beta[0, 0]
        model = vecm_fit(d, 1, 1, "none", beta=beta_norm)
        term = model.equations[0].terms[-1]
        if abs(term.coefficient - (-0.3)) <= 2.0 * term.standard_error:
            hits += 1
    share = hits / reps
    assert share >= 0.90
    print(f"\nPASS criterion 5: loading within 2 SE of -0.3 in {share:.3f} of reps")


def test_criterion_6_diagnostics_size():
    """White-type and joint-JB rejection on clean Gaussian VAR residuals."""
    white_rej = jb_rej = 0
    reps = 500
    for j in range(reps):
        spec = DgpSpec(kind="stationary_ar", k=2, T=300, seed=derive_seed(66006, j), phi=0.5)
        fit = var_fit(generate(spec), 1)
        if white_system_test(fit.residuals, fit.regressors[:, 1:]).p_value <= 0.05:
            white_rej += 1
        if multivariate_jb(fit.residuals).joint_jb_p <= 0.05:
            jb_rej += 1
    white_rate = white_rej / reps
    jb_rate = jb_rej / reps
    assert 0.02 <= white_rate <= 0.09
    assert 0.02 <= jb_rate <= 0.09
    print(f"\nPASS criterion 6: White size {white_rate:.3f}, joint-JB size "
          f"{jb_rate:.3f}, both in [0.02, 0.09]")


def test_criterion_7_paper_shaped_report(tmp_path):
    """Full CLI run must emit every report section in the expected shapes."""
    shutil.copy(DATA / "macro_panel.csv", tmp_path / "macro_panel.csv")
    shutil.copy(DATA / "paper_style.toml", tmp_path / "run.toml")
    assert main(["run", "--config", str(tmp_path / "run.toml")]) == 0
    payload = json.loads((tmp_path / "out" / "report.json").read_text())
    sections = payload["sections"]

    expected = ["adf_table", "lag_table", "johansen_table", "long_run_equation",
                "vecm_table", "heteroskedasticity", "normality"]
    assert list(sections) == expected

    assert [row["p"] for row in sections["lag_table"]["rows"]] == [1, 2, 3]
    for name in ("aic", "sc", "hq"):
        assert name in sections["lag_table"]["starred"]

    joh = sections["johansen_table"]
    assert len(joh["trace"]) == 4 and len(joh["max_eigen"]) == 4
    for row in joh["trace"] + joh["max_eigen"]:
        assert set(row) == {"rank", "statistic", "p_value"}

    equation = sections["long_run_equation"]["equation"]
    pattern = (
        r"^l_gdp = -?\d+\.\d{6} \* l_ac [+-] \d+\.\d{6} \* l_gcf "
        r"[+-] \d+\.\d{6} \* l_inf$"
    )
    assert re.fullmatch(pattern, equation), equation

    assert joh["selected_rank"] == 2
    ec_terms = [
        t["name"] for t in sections["vecm_table"]["equations"][0]["terms"]
        if t["name"].startswith("ec")
    ]
    assert len(ec_terms) == 2

    text = (tmp_path / "out" / "report.txt").read_text()
    assert equation in text
    print(f"\nPASS criterion 7: report carries all 7 sections; equation "
          f"{equation!r}; rank 2 with {len(ec_terms)} EC rows")


def test_criterion_8_byte_identical_outputs(tmp_path):
    """Any command, run twice on identical inputs, emits identical bytes."""
    shutil.copy(DATA / "macro_panel.csv", tmp_path / "macro_panel.csv")
    shutil.copy(DATA / "paper_style.toml", tmp_path / "run.toml")

    assert main(["run", "--config", str(tmp_path / "run.toml")]) == 0
    snapshot = {
        name: (tmp_path / "out" / name).read_bytes()
        for name in ("report.json", "report.txt", "trend.svg")
    }
    assert main(["run", "--config", str(tmp_path / "run.toml")]) == 0
    for name, blob in snapshot.items():
        assert (tmp_path / "out" / name).read_bytes() == blob, name

    for target in ("a.svg", "b.svg"):
        main(["plot", "--input", str(tmp_path / "macro_panel.csv"),
              "--vars", "gdp,ac", "--out", str(tmp_path / target)])
    assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()
    print("\nPASS criterion 8: repeated runs byte-identical for JSON, text and SVG")
