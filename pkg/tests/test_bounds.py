import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad as scipy_quad
from scipy.special import betainc as scipy_betainc

from ntarp import bounds
from ntarp.special import regularized_incomplete_beta

# Frozen reference table: per-dimension projection budgets with the
# resulting projection-count bound and the affine-VC bound
# (delta = 0.1, N = 10000, VC dimension d + 1).
REFERENCE_TABLE = [
    # d, n, projection bound, affine VC bound
    (2, 25, 0.118, 0.163),
    (3, 117, 0.123, 0.183),
    (4, 592, 0.129, 0.200),
    (5, 3278, 0.134, 0.216),
    (6, 19664, 0.139, 0.230),
    (7, 126414, 0.144, 0.244),
    (8, 863981, 0.150, 0.256),
    (9, 6236483, 0.155, 0.268),
    (10, 47292177, 0.160, 0.279),
]


class TestHighConfidenceBounds:
    @pytest.mark.parametrize("d,n,tarp_ref,vc_ref", REFERENCE_TABLE)
    def test_reference_table(self, d, n, tarp_ref, vc_ref):
        assert bounds.tarp_gap_bound(10000, n, 0.1) == pytest.approx(
            tarp_ref, abs=1e-3
        )
        assert bounds.vc_gap_bound(10000, d + 1, 0.1) == pytest.approx(
            vc_ref, abs=1e-3
        )

    def test_tarp_bound_closed_form(self):
        # direct transcription oracle at one configuration
        N, n, delta = 500, 7, 0.05
        assert bounds.tarp_gap_bound(N, n, delta) == pytest.approx(
            math.sqrt(8.0 / N * math.log(16.0 * n * N / delta)), rel=1e-12
        )

    def test_vc_bound_log_space_matches_naive_small(self):
        # small configuration where the naive power does not overflow
        N, d_vc, delta = 100, 3, 0.1
        naive = math.sqrt(
            8.0 / N * math.log(4.0 * (2.0 * math.e * N / d_vc) ** d_vc / delta)
        )
        assert bounds.vc_gap_bound(N, d_vc, delta) == pytest.approx(naive, rel=1e-12)

    def test_vc_bound_survives_large_vc_dimension(self):
        # naive growth power overflows for d_vc this large; log-space must not
        value = bounds.vc_gap_bound(10**6, 5000, 0.1)
        assert math.isfinite(value) and value > 0

    def test_combined_is_min(self):
        for N, n, d in [(1000, 5, 8), (1000, 10**9, 2), (200, 100, 3)]:
            combined = bounds.combined_gap_bound(N, n, d, 0.1)
            assert combined == pytest.approx(
                min(
                    bounds.tarp_gap_bound(N, n, 0.1),
                    bounds.vc_gap_bound(N, d + 1, 0.1),
                ),
                rel=1e-12,
            )

    @given(
        st.integers(min_value=2, max_value=10**5),
        st.integers(min_value=1, max_value=10**6),
    )
    @settings(max_examples=100, deadline=None)
    def test_tarp_bound_monotone(self, N, n):
        # increasing in n, decreasing in delta
        assert bounds.tarp_gap_bound(N, n + 1, 0.1) >= bounds.tarp_gap_bound(N, n, 0.1)
        assert bounds.tarp_gap_bound(N, n, 0.05) >= bounds.tarp_gap_bound(N, n, 0.1)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bounds.tarp_gap_bound(0, 1, 0.1)
        with pytest.raises(ValueError):
            bounds.tarp_gap_bound(10, 0, 0.1)
        with pytest.raises(ValueError):
            bounds.tarp_gap_bound(10, 1, 0.0)
        with pytest.raises(ValueError):
            bounds.vc_gap_bound(10, 0, 0.1)


class TestCrossover:
    # worked values from the same source as the reference table, all
    # reproduced with growth exponent equal to the ambient dimension
    @pytest.mark.parametrize(
        "d,expected",
        [(1, 1.4), (2, 1800.0), (3, 1.5e6), (5, 3.8e11)],
    )
    def test_worked_values(self, d, expected):
        assert bounds.crossover_n(1000, d) == pytest.approx(expected, rel=0.05)

    def test_closed_form_oracle(self):
        N, d_vc = 1000, 2
        assert bounds.crossover_n(N, d_vc) == pytest.approx(
            (2.0 * N * math.e / d_vc) ** d_vc / (4.0 * N), rel=1e-12
        )

    def test_bounds_actually_cross_near_crossover(self):
        N, d = 1000, 2
        n_star = bounds.crossover_n(N, d + 1)
        # below the crossover the projection bound wins, above the VC bound wins
        lo, hi = math.floor(n_star / 2), math.ceil(n_star * 2)
        assert bounds.tarp_gap_bound(N, lo, 0.1) < bounds.vc_gap_bound(N, d + 1, 0.1)
        assert bounds.tarp_gap_bound(N, hi, 0.1) > bounds.vc_gap_bound(N, d + 1, 0.1)


class TestExpectedGapBounds:
    def test_closed_forms(self):
        N, n = 10000, 100
        assert bounds.tarp_expected_gap_bound(N, n) == pytest.approx(
            math.sqrt(2.0 * math.log(8.0 * n * N) / N), rel=1e-12
        )
        assert bounds.vc_expected_gap_bound_sauer(N, 2) == pytest.approx(
            math.sqrt(2.0 * math.log(2.0 * (2 * N + 1) ** 2) / N), rel=1e-12
        )

    def test_single_projection_value(self):
        assert bounds.tarp_expected_gap_bound(10000, 1) == pytest.approx(
            0.0475, abs=5e-4
        )

    def test_sauer_survives_large_vc_dimension(self):
        assert math.isfinite(bounds.vc_expected_gap_bound_sauer(10**6, 10**4))


class TestChaining:
    def test_tarp_chaining_n_one(self):
        # sqrt(ln 1) = 0, so the bound collapses to 24 * 1.66 / sqrt(N)
        for N in (100, 10000):
            assert bounds.chaining_tarp_bound(N, 1) == pytest.approx(
                39.84 / math.sqrt(N), rel=1e-12
            )

    def test_vc_chaining_values(self):
        assert bounds.chaining_vc_bound(10000, 1) == pytest.approx(0.6516, rel=1e-12)
        assert bounds.chaining_vc_bound(100, 4) == pytest.approx(13.032, rel=1e-12)

    def test_integral_constant(self):
        value = bounds.chaining_integral(1)
        assert 1.5 <= value <= 1.66

    def test_integral_against_direct_quadrature(self):
        # oracle: integrate in the original variable r over (0, 1]
        for n in (1, 2, 10, 1000):
            def integrand(r, log_n=math.log(n)):
                return math.sqrt(log_n + math.log(2.0 / r**2 + 2.0))

            oracle, _ = scipy_quad(integrand, 0.0, 1.0, limit=200)
            assert bounds.chaining_integral(n) == pytest.approx(oracle, abs=1e-6)

    def test_integral_dominates_sqrt_log_n(self):
        # pointwise the integrand exceeds sqrt(ln n), so the integral does too
        for n in (2, 50, 10**4):
            assert bounds.chaining_integral(n) >= math.sqrt(math.log(n))

    def test_integral_subadditive_offset(self):
        # sqrt(a + b) <= sqrt(a) + sqrt(b) gives integral(n) <= sqrt(ln n) + integral(1)
        c1 = bounds.chaining_integral(1)
        for n in (2, 100, 10**6):
            assert bounds.chaining_integral(n) <= math.sqrt(math.log(n)) + c1 + 1e-9

    def test_chaining_bound_uses_166_majorant(self):
        # the closed-form bound majorizes the prefactor times the true integral
        for N, n in [(100, 1), (10000, 50), (400, 10**4)]:
            exact = bounds.CHAINING_PREFACTOR / math.sqrt(N) * bounds.chaining_integral(n)
            assert bounds.chaining_tarp_bound(N, n) >= exact - 1e-9


def greedy_cover_size(N, i):
    """Oracle: greedy cover of the chain {v_0..v_N} by closed balls of
    radius sqrt(i/N) in root-normalized Hamming distance.

    Chain neighbours differ in one coordinate, so v_a and v_b are at
    distance sqrt(|a-b|/N); a ball centred at v_c covers |a - c| <= i.
    """
    count = 0
    a = 0
    while a <= N:
        count += 1
        a += 2 * i + 1  # centre at a + i covers up to a + 2i
    return count


class TestCoveringNumbers:
    def test_small_values(self):
        assert bounds.covering_number_bound(10, 1) == 7
        assert bounds.covering_number_bound(10, 10) == 1
        assert bounds.covering_number_bound(100, 2) == 40

    @pytest.mark.parametrize("N", [1, 2, 7, 50, 333])
    def test_matches_greedy_cover_oracle(self, N):
        for i in range(1, N + 1):
            assert bounds.covering_number_bound(N, i) >= greedy_cover_size(N, i)

    def test_radius_index_domain(self):
        with pytest.raises(ValueError):
            bounds.covering_number_bound(10, 0)
        with pytest.raises(ValueError):
            bounds.covering_number_bound(10, 11)


class TestRatioAndBudget:
    def test_ratio_limit_formula(self):
        n, d_vc = 100, 3
        expected = (24.0 / 65.16) * (
            math.sqrt(math.log(n) / d_vc) + 1.66 / math.sqrt(d_vc)
        )
        assert bounds.ratio_limit(n, d_vc) == pytest.approx(expected, rel=1e-12)

    def test_budget_table_values(self):
        floors = [math.floor(bounds.max_projections_for_vc(d)) for d in range(1, 6)]
        assert floors == [3, 115, 10476, 1487935, 281672459]

    @pytest.mark.parametrize("d_vc", [1, 2, 3, 4, 5, 10])
    def test_budget_is_the_unit_ratio_point(self, d_vc):
        # at the exact budget the two chaining bounds agree
        n_star = bounds.max_projections_for_vc(d_vc)
        assert bounds.ratio_limit(n_star, d_vc) == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("d_vc", [2, 3, 5])
    def test_budget_separates_the_chaining_bounds(self, d_vc):
        n_star = bounds.max_projections_for_vc(d_vc)
        N = 10**6
        below = bounds.chaining_tarp_bound(N, math.floor(n_star))
        above = bounds.chaining_tarp_bound(N, math.ceil(n_star) + 1)
        vc = bounds.chaining_vc_bound(N, d_vc)
        assert below <= vc <= above


class TestRegularizedIncompleteBeta:
    def test_endpoints(self):
        assert regularized_incomplete_beta(0.0, 2.0, 3.0) == 0.0
        assert regularized_incomplete_beta(1.0, 2.0, 3.0) == 1.0

    def test_closed_form_a1(self):
        # I_x(1, b) = 1 - (1-x)^b
        for x in np.linspace(0.01, 0.99, 99):
            assert regularized_incomplete_beta(x, 1.0, 0.5) == pytest.approx(
                1.0 - math.sqrt(1.0 - x), abs=1e-10
            )

    def test_closed_form_half_half(self):
        # I_x(1/2, 1/2) = (2/pi) arcsin(sqrt(x))
        for x in np.linspace(0.01, 0.99, 99):
            assert regularized_incomplete_beta(x, 0.5, 0.5) == pytest.approx(
                2.0 / math.pi * math.asin(math.sqrt(x)), abs=1e-10
            )

    def test_symmetry_identity(self):
        # I_x(a, b) + I_{1-x}(b, a) = 1
        for x in (0.05, 0.3, 0.5, 0.77, 0.95):
            for a, b in [(0.5, 0.5), (2.0, 5.0), (7.5, 0.5), (1.0, 1.0)]:
                total = regularized_incomplete_beta(
                    x, a, b
                ) + regularized_incomplete_beta(1.0 - x, b, a)
                assert total == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("a", [0.5, 1.0, 1.5, 2.0, 5.0])
    @pytest.mark.parametrize("b", [0.5, 1.0, 1.5, 2.0, 5.0])
    def test_quadrature_oracle_grid(self, a, b):
        from scipy.special import beta as beta_fn

        for x in np.linspace(0.01, 0.99, 25):
            oracle, _ = scipy_quad(
                lambda t: t ** (a - 1.0) * (1.0 - t) ** (b - 1.0),
                0.0,
                x,
                epsabs=1e-13,
                epsrel=1e-13,
                limit=500,
            )
            oracle /= beta_fn(a, b)
            assert regularized_incomplete_beta(x, a, b) == pytest.approx(
                oracle, abs=1e-9
            )

    @given(
        st.floats(min_value=0.0, max_value=1.0),
        st.floats(min_value=0.1, max_value=50.0),
        st.floats(min_value=0.1, max_value=50.0),
    )
    @settings(max_examples=300, deadline=None)
    def test_matches_scipy_everywhere(self, x, a, b):
        assert regularized_incomplete_beta(x, a, b) == pytest.approx(
            float(scipy_betainc(a, b, x)), abs=1e-12
        )

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            regularized_incomplete_beta(-0.1, 1.0, 1.0)
        with pytest.raises(ValueError):
            regularized_incomplete_beta(1.1, 1.0, 1.0)
        with pytest.raises(ValueError):
            regularized_incomplete_beta(0.5, 0.0, 1.0)
        with pytest.raises(ValueError):
            regularized_incomplete_beta(0.5, 1.0, -1.0)


class TestRequiredProjections:
    def test_planar_affine_value(self):
        # d = 2, k = 1 expands to dimension 3; closed-form cap area oracle:
        # I_x(1, 1/2) = 1 - sqrt(1 - x) with x = sin^2(4 arcsin(1/24))
        x = math.sin(4.0 * math.asin(1.0 / 24.0)) ** 2
        cap = 1.0 - math.sqrt(1.0 - x)
        oracle = math.log(0.1) / math.log1p(-cap)
        value = bounds.required_projections(2, 1, 0.1)
        assert value == pytest.approx(oracle, rel=1e-12)
        assert value == pytest.approx(164.9, abs=0.1)

    def test_decreasing_in_delta(self):
        assert bounds.required_projections(2, 1, 0.01) > bounds.required_projections(
            2, 1, 0.1
        )

    def test_increasing_in_dimension(self):
        values = [bounds.required_projections(d, 1, 0.1) for d in range(2, 8)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_rejects_trivial_expansion(self):
        # d = 1, k = 0 expands to a single constant feature
        with pytest.raises(ValueError):
            bounds.required_projections(1, 0, 0.1)


class TestHoeffding:
    def test_reference_value(self):
        assert bounds.hoeffding_deviation(2000, 0.1) == pytest.approx(0.0274, abs=1e-4)

    def test_closed_form(self):
        assert bounds.hoeffding_deviation(50, 0.5) == pytest.approx(
            math.sqrt(math.log(4.0) / 100.0), rel=1e-12
        )

    def test_domain(self):
        with pytest.raises(ValueError):
            bounds.hoeffding_deviation(0, 0.1)
        with pytest.raises(ValueError):
            bounds.hoeffding_deviation(10, 1.0)


class TestBoundReport:
    def test_report_contains_all_bounds(self):
        cfg = bounds.BoundConfig(N=10000, n=25, d=2)
        report = bounds.bound_report(cfg)
        assert cfg.d_vc == 3
        assert report.values["tarp_gap"] == pytest.approx(0.118, abs=1e-3)
        assert report.values["vc_gap"] == pytest.approx(0.163, abs=1e-3)
        assert report.values["combined_gap"] == min(
            report.values["tarp_gap"], report.values["vc_gap"]
        )
        assert set(report.values) == {
            "tarp_gap",
            "vc_gap",
            "combined_gap",
            "tarp_expected_gap",
            "vc_expected_gap_sauer",
            "chaining_tarp",
            "chaining_vc",
            "crossover_n",
            "hoeffding",
        }

    def test_config_validation(self):
        with pytest.raises(ValueError):
            bounds.BoundConfig(N=0, n=1, d=2)
        with pytest.raises(ValueError):
            bounds.BoundConfig(N=10, n=1, d=2, delta=2.0)
