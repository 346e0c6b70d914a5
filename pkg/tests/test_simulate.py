import numpy as np
import pytest

from cointkit.errors import CointkitError, UnstableSpec
from cointkit.rng import Xoshiro256StarStar, derive_seed, splitmix64
from cointkit.simulate import DgpSpec, generate, rejection_rate


class TestRng:
    def test_splitmix_reproducible(self):
        a1, s1 = splitmix64(12345)
        a2, s2 = splitmix64(12345)
        assert a1 == a2 and s1 == s2
        assert 0 <= a1 < 2**64

    def test_derive_seed_collision_free(self):
        seeds = {derive_seed(777, j) for j in range(10_000)}
        assert len(seeds) == 10_000

    def test_stream_reproducible(self):
        a = Xoshiro256StarStar(99)
        b = Xoshiro256StarStar(99)
        assert [a.next_uint64() for _ in range(50)] == [b.next_uint64() for _ in range(50)]

    def test_different_seeds_different_streams(self):
        a = Xoshiro256StarStar(1)
        b = Xoshiro256StarStar(2)
        assert [a.next_uint64() for _ in range(8)] != [b.next_uint64() for _ in range(8)]

    def test_uniform_range_and_mean(self):
        gen = Xoshiro256StarStar(2024)
        draws = [gen.uniform() for _ in range(20_000)]
        assert all(0.0 <= u < 1.0 for u in draws)
        assert abs(np.mean(draws) - 0.5) < 0.01
        assert abs(np.var(draws) - 1.0 / 12.0) < 0.005

    def test_normal_moments(self):
        gen = Xoshiro256StarStar(7)
        z = np.array(gen.normals(40_000))
        assert abs(z.mean()) < 0.02
        assert abs(z.std() - 1.0) < 0.02
        assert abs(np.mean(z**3)) < 0.06
        assert abs(np.mean(z**4) - 3.0) < 0.15


class TestGenerate:
    def test_same_spec_bit_identical(self):
        spec = DgpSpec(kind="random_walk", k=3, T=50, seed=11)
        assert generate(spec) == generate(spec)

    def test_zero_covariance_gives_constant_series(self):
        spec = DgpSpec(
            kind="random_walk", k=2, T=20, seed=3,
            innovation_cov=((0.0, 0.0), (0.0, 0.0)),
        )
        d = generate(spec)
        for s in d.variables:
            assert all(v == s.values[0] for v in s.values)

    def test_dataset_invariants(self):
        for kind, extra in (
            ("random_walk", {}),
            ("stationary_ar", {"phi": 0.4}),
            (
                "cointegrated_system",
                {"loading": ((-0.3,), (0.0,)), "cointegration": ((1.0,), (-1.0,))},
            ),
        ):
            spec = DgpSpec(kind=kind, k=2, T=30, seed=5, **extra)
            d = generate(spec)
            assert d.n_obs == 30 and d.n_vars == 2
            assert d.years == tuple(range(1, 31))

    def test_innovation_covariance_honored(self):
        cov = ((2.0, 0.8), (0.8, 1.0))
        spec = DgpSpec(kind="stationary_ar", k=2, T=20_000, seed=17, phi=0.0,
                       innovation_cov=cov)
        y = generate(spec).to_matrix()
        sample = y.T @ y / len(y)
        np.testing.assert_allclose(sample, cov, atol=0.08)

    def test_explosive_ar_rejected(self):
        with pytest.raises(UnstableSpec):
            generate(DgpSpec(kind="stationary_ar", k=1, T=10, seed=1, phi=1.01))

    def test_unstable_loading_rejected(self):
        spec = DgpSpec(
            kind="cointegrated_system", k=2, T=10, seed=1,
            loading=((-2.5,), (0.0,)), cointegration=((1.0,), (-1.0,)),
        )
        with pytest.raises(UnstableSpec):
            generate(spec)

    def test_rank_deficient_beta_rejected(self):
        spec = DgpSpec(
            kind="cointegrated_system", k=3, T=10, seed=1,
            loading=((-0.3, -0.3), (0.0, 0.0), (0.0, 0.0)),
            cointegration=((1.0, 2.0), (-1.0, -2.0), (0.0, 0.0)),
        )
        with pytest.raises(UnstableSpec):
            generate(spec)

    def test_full_rank_beta_rejected(self):
        spec = DgpSpec(
            kind="cointegrated_system", k=2, T=10, seed=1,
            loading=((-0.3, 0.0), (0.0, -0.3)),
            cointegration=((1.0, 0.0), (0.0, 1.0)),
        )
        with pytest.raises(UnstableSpec):
            generate(spec)

    def test_unknown_kind_rejected(self):
        with pytest.raises(UnstableSpec):
            DgpSpec(kind="brownian_bridge", k=1, T=10, seed=1)

    def test_cointegrated_relation_is_stationary(self):
        from cointkit.adf import adf_test
        from cointkit.series import Series

        hits = 0
        reps = 100
        for j in range(reps):
            spec = DgpSpec(
                kind="cointegrated_system", k=2, T=400, seed=derive_seed(2468, j),
                loading=((-0.3,), (0.0,)), cointegration=((1.0,), (-1.0,)),
            )
            d = generate(spec)
            combo = d.to_matrix() @ np.array([1.0, -1.0])
            s = Series.from_arrays("ec", d.years, combo)
            if adf_test(s, "constant", lags=0).p_value <= 0.05:
                hits += 1
        assert hits / reps >= 0.85


class TestRejectionRate:
    def test_always_rejects(self):
        spec = DgpSpec(kind="random_walk", k=1, T=20, seed=1)
        out = rejection_rate(lambda d: 0.0, spec, reps=25)
        assert out.rate == 1.0 and out.completed == 25 and out.failures == 0

    def test_never_rejects(self):
        spec = DgpSpec(kind="random_walk", k=1, T=20, seed=1)
        out = rejection_rate(lambda d: 1.0, spec, reps=25)
        assert out.rate == 0.0

    def test_failures_counted_not_dropped(self):
        spec = DgpSpec(kind="random_walk", k=1, T=20, seed=1)
        calls = {"n": 0}

        def flaky(dataset):
            calls["n"] += 1
            if calls["n"] % 5 == 0:
                raise CointkitError("synthetic failure")
            return 0.01

        out = rejection_rate(flaky, spec, reps=25, alpha=0.05)
        assert out.failures == 5
        assert out.completed == 20
        assert out.rate == 1.0
        assert len(out.failure_messages) == 5

    def test_replications_use_derived_seeds(self):
        spec = DgpSpec(kind="random_walk", k=1, T=30, seed=42)
        seen = []
        rejection_rate(lambda d: seen.append(d.variables[0].values[-1]) or 1.0, spec, reps=8)
        assert len(set(seen)) == 8   # every replication distinct

    def test_adf_size_via_driver(self):
        from cointkit.adf import adf_test

        spec = DgpSpec(kind="random_walk", k=1, T=100, seed=31337)
        out = rejection_rate(
            lambda d: adf_test(d.variables[0], "constant", lags=0).p_value,
            spec, reps=300, alpha=0.05,
        )
        assert 0.02 <= out.rate <= 0.09
        assert out.failures == 0
