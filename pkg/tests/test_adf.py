import numpy as np
import pytest

from cointkit.adf import (
    DETERMINISTIC_CASES,
    adf_test,
    auto_lag,
    classify_integration,
    mackinnon_crit,
    mackinnon_pvalue,
)
from cointkit.errors import SeriesTooShort, ZeroVariance
from cointkit.linreg import ols_fit
from cointkit.rng import Xoshiro256StarStar, derive_seed
from cointkit.series import Series

from conftest import make_series


def _walk(seed, T, phi=1.0, drift=0.0):
    gen = Xoshiro256StarStar(seed)
    vals = []
    prev = 0.0
    for _ in range(T):
        prev = phi * prev + drift + gen.normal()
        vals.append(prev)
    return make_series(vals, start_year=1900)


class TestMacKinnonPvalue:
    @pytest.mark.parametrize("det", DETERMINISTIC_CASES)
    def test_tails(self, det):
        assert mackinnon_pvalue(-50.0, det) == 0.0
        assert mackinnon_pvalue(50.0, det) == 1.0

    @pytest.mark.parametrize("det", DETERMINISTIC_CASES)
    @pytest.mark.parametrize("n", [None, 24, 50, 250])
    def test_consistent_with_critical_values(self, det, n):
        # p at the embedded 5% critical value must be 5%
        cv = mackinnon_crit(det, n)["5%"]
        assert mackinnon_pvalue(cv, det, n) == pytest.approx(0.05, abs=0.005)

    @pytest.mark.parametrize("det", DETERMINISTIC_CASES)
    def test_monotone_decreasing_in_statistic(self, det):
        grid = np.linspace(-12.0, 2.0, 600)
        for n in (None, 24, 100):
            ps = [mackinnon_pvalue(t, det, n) for t in grid]
            assert all(a <= b + 1e-12 for a, b in zip(ps, ps[1:]))
            interior = [(a, b) for a, b in zip(ps, ps[1:]) if 0.0 < a < 1.0 and 0.0 < b < 1.0]
            assert all(a < b for a, b in interior)

    def test_small_sample_trend_case_anchor(self):
        # trended case, n ~ 24: deep rejection region
        assert mackinnon_pvalue(-4.361670, "constant_and_trend", 24) == pytest.approx(
            0.0112, abs=0.01
        )

    def test_in_unit_interval(self):
        for t in np.linspace(-30, 10, 200):
            for det in DETERMINISTIC_CASES:
                assert 0.0 <= mackinnon_pvalue(float(t), det, 40) <= 1.0

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            mackinnon_pvalue(float("nan"), "constant")


class TestAdfRegression:
    def test_zero_lag_matches_direct_ols_oracle(self):
        s = _walk(seed=7, T=80)
        res = adf_test(s, "constant", lags=0)
        # independent construction of the Dickey-Fuller regression
        y = s.to_array()
        dy = np.diff(y)
        X = np.column_stack([y[:-1], np.ones(len(dy))])
        fit = ols_fit(X, dy)
        assert res.statistic == pytest.approx(float(fit.t_statistics[0]), abs=1e-9)
        assert res.n_effective == len(dy)

    def test_constant_series_zero_variance(self):
        with pytest.raises(ZeroVariance):
            adf_test(make_series([5.0] * 30), "constant", lags=0)

    def test_too_short(self):
        with pytest.raises(SeriesTooShort):
            adf_test(make_series([1.0, 2.0, 1.5, 2.5]), "constant", lags=3)

    def test_shift_invariance_constant_case(self):
        s = _walk(seed=11, T=60)
        shifted = Series(s.name, s.years, tuple(v + 250.0 for v in s.values))
        a = adf_test(s, "constant", lags=1)
        b = adf_test(shifted, "constant", lags=1)
        assert a.statistic == pytest.approx(b.statistic, abs=1e-9)

    def test_lags_used_respects_request(self):
        s = _walk(seed=13, T=90)
        res = adf_test(s, "constant", lags=4)
        assert res.lags_used == 4
        auto = adf_test(s, "constant", lags="auto", max_lags=6)
        assert auto.lags_used <= 6


class TestAutoLag:
    def test_single_candidate(self):
        s = _walk(seed=17, T=40)
        assert auto_lag(s, "constant", max_lags=0) == 0

    def test_white_noise_prefers_zero(self):
        wins = 0
        reps = 200
        for j in range(reps):
            gen = Xoshiro256StarStar(derive_seed(555, j))
            s = make_series(gen.normals(200))
            if auto_lag(s, "constant", max_lags=8) == 0:
                wins += 1
        assert wins / reps >= 0.90

    def test_ar2_differences_need_two_lags(self):
        # dy follows an AR(2) with a strong second lag
        wins = 0
        reps = 120
        for j in range(reps):
            gen = Xoshiro256StarStar(derive_seed(556, j))
            dy = [0.0, 0.0]
            for _ in range(400):
                dy.append(0.1 * dy[-1] + 0.6 * dy[-2] + gen.normal())
            y = np.cumsum(dy[2:])
            s = make_series(y)
            if auto_lag(s, "constant", max_lags=6) >= 2:
                wins += 1
        assert wins / reps > 0.5


class TestAdfSizeAndPower:
    def test_random_walk_size_quick(self):
        rejections = 0
        reps = 300
        for j in range(reps):
            s = _walk(derive_seed(90210, j), T=100)
            if adf_test(s, "constant", lags=0).p_value <= 0.05:
                rejections += 1
        assert 0.02 <= rejections / reps <= 0.09

    def test_stationary_power_quick(self):
        rejections = 0
        reps = 100
        for j in range(reps):
            s = _walk(derive_seed(90211, j), T=200, phi=0.5)
            if adf_test(s, "constant", lags=0).p_value <= 0.05:
                rejections += 1
        assert rejections / reps >= 0.90


class TestClassifyIntegration:
    def test_decision_rule_consistency(self):
        # the reported order must match the level/difference p-values
        for seed, phi in ((1, 1.0), (2, 0.5), (3, 0.95)):
            s = _walk(seed=seed, T=150, phi=phi)
            dec = classify_integration(s, alpha=0.05)
            level_stationary = dec.level.p_value <= 0.05
            diff_stationary = dec.first_difference.p_value <= 0.05
            if level_stationary:
                assert dec.order == "I0"
            elif diff_stationary:
                assert dec.order == "I1"
            else:
                assert dec.order == "inconclusive"

    def test_stationary_ar_classified_i0(self):
        wins = 0
        reps = 100
        for j in range(reps):
            s = _walk(derive_seed(777, j), T=300, phi=0.5)
            if classify_integration(s).order == "I0":
                wins += 1
        assert wins / reps >= 0.90

    def test_random_walk_classified_i1(self):
        wins = 0
        reps = 100
        for j in range(reps):
            s = _walk(derive_seed(778, j), T=300)
            if classify_integration(s).order == "I1":
                wins += 1
        assert wins / reps >= 0.85

    def test_uses_configured_cases(self):
        s = _walk(seed=5, T=120)
        dec = classify_integration(s, level_deterministic="constant", diff_deterministic="none")
        assert dec.level.deterministic == "constant"
        assert dec.first_difference.deterministic == "none"
