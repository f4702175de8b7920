"""Seeded Monte Carlo harness: streams, samplers, KS statistic, simulate."""

import math
from fractions import Fraction as F

import numpy as np
import pytest

from dirmix.catalog import (
    Arcsin,
    Beta4,
    GenArcsin,
    PointMass,
    PowerSemicircle,
    Uniform,
)
from dirmix.montecarlo import (
    KS_CRITICAL_COEFF_1PCT,
    RngStream,
    _draw_sums,
    ks_statistic,
    sample_spacings,
    sample_variates,
    simulate,
)

SEED = 12345


class TestRngStream:
    def test_pure_function_of_seed_and_stream(self):
        a = RngStream(42, 7).uniforms(100)
        b = RngStream(42, 7).uniforms(100)
        assert np.array_equal(a, b)

    def test_distinct_streams_differ(self):
        a = RngStream(42, 0).uniforms(100)
        b = RngStream(42, 1).uniforms(100)
        assert not np.array_equal(a, b)

    def test_seed_validation(self):
        with pytest.raises(ValueError):
            RngStream(-1)
        with pytest.raises(ValueError):
            RngStream(1 << 64)
        with pytest.raises(ValueError):
            RngStream(1, -2)


class TestSampleSpacings:
    def test_single_component(self):
        assert np.array_equal(sample_spacings(1, RngStream(SEED)), np.array([1.0]))

    def test_shapes(self):
        assert sample_spacings(4, RngStream(SEED)).shape == (4,)
        assert sample_spacings(4, RngStream(SEED), size=50).shape == (50, 4)

    def test_rows_are_simplex_points(self):
        rows = sample_spacings(5, RngStream(SEED), size=10**4)
        assert np.all(rows >= 0)
        assert np.max(np.abs(rows.sum(axis=1) - 1.0)) <= 1e-15

    def test_first_weight_mean_matches_beta_marginal(self):
        # R_1 ~ Beta(1, n-1): mean 1/n, variance (n-1)/(n^2 (n+1))
        n, draws = 4, 10**5
        rows = sample_spacings(n, RngStream(SEED), size=draws)
        se = math.sqrt((n - 1) / (n**2 * (n + 1)) / draws)
        assert abs(rows[:, 0].mean() - 1.0 / n) <= 5 * se

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            sample_spacings(0, RngStream(SEED))


class TestSampleVariates:
    def test_arcsin_is_cosine_map_of_stream(self):
        draws = sample_variates(Arcsin(1), RngStream(SEED, 3), size=10**4)
        u = RngStream(SEED, 3).uniforms(10**4)
        assert np.array_equal(draws, -np.cos(math.pi * u))

    @pytest.mark.parametrize(
        "dist",
        [
            Arcsin(1),
            GenArcsin(F(1, 4), 1),
            PowerSemicircle(F(1, 4), 1),  # Johnk branch (shapes 3/4)
            PowerSemicircle(2, 1),  # gamma branch (shapes 5/2)
            Beta4(F(1, 2), F(3, 2), -1, 2),
            Uniform(-2, 5),
            PointMass(F(1, 3)),
        ],
        ids=str,
    )
    def test_samples_lie_in_closed_support(self, dist):
        lo, hi = (float(v) for v in dist.support())
        draws = sample_variates(dist, RngStream(SEED), size=20000)
        assert draws.min() >= lo and draws.max() <= hi

    def test_genarcsin_standardized_mean(self):
        # Beta(1/4, 3/4): mean 1/4, variance pq/((p+q)^2 (p+q+1)) = 3/32
        draws = sample_variates(GenArcsin(F(1, 4), 1), RngStream(SEED), size=10**5)
        standardized = (draws + 1.0) / 2.0
        se = math.sqrt((3.0 / 32.0) / draws.size)
        assert abs(standardized.mean() - 0.25) <= 5 * se

    def test_johnk_unit_shapes_match_uniform_mean(self):
        draws = sample_variates(Beta4(1, 1, 0, 1), RngStream(SEED), size=10**5)
        se = math.sqrt((1.0 / 12.0) / draws.size)
        assert abs(draws.mean() - 0.5) <= 5 * se

    def test_scalar_draw(self):
        x = sample_variates(Uniform(0, 1), RngStream(SEED))
        assert isinstance(x, float) and 0.0 <= x <= 1.0

    def test_point_mass_exact(self):
        draws = sample_variates(PointMass(F(1, 3)), RngStream(SEED), size=10)
        assert np.all(draws == float(F(1, 3)))


class TestKsStatistic:
    def test_single_sample_at_median(self):
        assert ks_statistic(np.array([0.5]), Uniform(0, 1).cdf) == pytest.approx(0.5)

    def test_exact_quantile_placement(self):
        n = 1000
        samples = (np.arange(1, n + 1) - 0.5) / n
        assert ks_statistic(samples, Uniform(0, 1).cdf) == pytest.approx(1.0 / (2 * n))

    def test_large_uniform_sample_beats_critical_value(self):
        n = 10**6
        samples = np.sort(RngStream(SEED, 9).uniforms(n))
        d = ks_statistic(samples, Uniform(0, 1).cdf)
        assert d <= KS_CRITICAL_COEFF_1PCT / math.sqrt(n)

    def test_contract_violations(self):
        with pytest.raises(ValueError):
            ks_statistic(np.array([]), Uniform(0, 1).cdf)
        with pytest.raises(ValueError):
            ks_statistic(np.array([0.5, 0.25]), Uniform(0, 1).cdf)


class TestSimulate:
    def test_reports_are_bit_identical(self):
        a = simulate(Arcsin(1), 2, 2000, SEED)
        b = simulate(Arcsin(1), 2, 2000, SEED)
        assert a.to_json_dict() == b.to_json_dict()

    def test_target_selection(self):
        assert simulate(Arcsin(1), 3, 1000, SEED).target == PowerSemicircle(1, 1)
        assert simulate(GenArcsin(F(1, 4), 2), 2, 1000, SEED).target == Beta4(
            F(1, 2), F(3, 2), -2, 4
        )
        assert simulate(Uniform(0, 1), 2, 1000, SEED).target is None

    def test_point_mass_trivially_passes(self):
        report = simulate(PointMass(F(1, 3)), 4, 2000, SEED)
        assert report.passed
        assert report.ks_statistic is None
        assert all(c.std_error == 0.0 for c in report.checks)

    def test_sums_stay_in_closed_support(self):
        for dist, n in ((Arcsin(1), 3), (GenArcsin(F(1, 4), 1), 2), (Uniform(-2, 5), 4)):
            lo, hi = (float(v) for v in dist.support())
            sums = _draw_sums(dist, n, 20000, SEED)
            # convex combinations cannot escape; allow float-dot roundoff
            assert sums.min() >= lo - 1e-12 and sums.max() <= hi + 1e-12

    @pytest.mark.parametrize(
        "dist,n",
        [(Arcsin(1), 5), (GenArcsin(F(1, 3), 1), 3)],
        ids=["arcsin-n5", "genarcsin13-n3"],
    )
    def test_remaining_golden_scenarios_pass_at_full_size(self, dist, n):
        # the other documented golden-seed runs; the acceptance suite covers
        # arcsin n in {2,3} and genarcsin(1/4) n=2
        report = simulate(dist, n, 10**6, SEED)
        assert report.passed
        assert report.ks_statistic <= report.ks_critical_1pct

    def test_moment_error_shrinks_with_sample_size(self):
        errors = {}
        for n_samples in (10**4, 10**6):
            report = simulate(Arcsin(1), 3, n_samples, SEED)
            errors[n_samples] = max(abs(c.empirical - c.exact_float) for c in report.checks)
        assert errors[10**6] < errors[10**4]

    def test_sample_floor_enforced(self):
        with pytest.raises(ValueError):
            simulate(Arcsin(1), 2, 999, SEED)

    def test_critical_value_formula(self):
        report = simulate(Arcsin(1), 2, 4000, SEED)
        assert report.ks_critical_1pct == pytest.approx(1.628 / math.sqrt(4000))

    def test_csv_rows_cover_all_checks(self):
        report = simulate(Arcsin(1), 2, 1000, SEED)
        rows = report.to_csv_rows()
        assert len(rows) == 1 + len(report.checks)
        assert rows[0]["check"] == "ks"
