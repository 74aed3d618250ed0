import math

import numpy as np
import pytest

from ppvlab.core import (
    Diagnosis,
    OperatingPoint,
    Regime,
    StudyContext,
    alpha_max,
    classify,
    cost_of_discovery,
    diagnose,
    lambda_required,
    leverage,
    misinfo_floor,
    npv,
    pi_crit,
    pi_half,
    posterior_log_odds,
    ppv,
    ppv_ceiling,
    psi,
)
from ppvlab.errors import DomainError


class TestOperatingPoint:
    def test_leverage(self):
        assert leverage(OperatingPoint(0.05, 0.80)) == pytest.approx(16.0)
        assert leverage(OperatingPoint(0.05, 0.35)) == pytest.approx(7.0)
        assert leverage(OperatingPoint(0.05, 0.05)) == pytest.approx(1.0)

    def test_power_one_admitted(self):
        assert OperatingPoint(0.05, 1.0).beta == 0.0

    def test_boundaries_rejected(self):
        for alpha, power in [(0.0, 0.8), (1.0, 0.8), (0.05, 0.0), (0.05, 1.5),
                             (math.nan, 0.8), (0.05, math.nan)]:
            with pytest.raises(DomainError):
                OperatingPoint(alpha, power)

    def test_context_open_intervals(self):
        with pytest.raises(DomainError):
            StudyContext(0.0, 0.95)
        with pytest.raises(DomainError):
            StudyContext(0.1, 1.0)


class TestPpv:
    def test_reference_points(self):
        assert ppv(0.10, 7) == pytest.approx(0.4375, abs=1e-12)
        assert ppv(0.10, 16) == pytest.approx(0.64, abs=1e-12)

    def test_unit_leverage_returns_prior(self):
        rng = np.random.default_rng(0)
        for pi in rng.uniform(1e-6, 1 - 1e-6, 200):
            assert ppv(float(pi), 1.0) == pytest.approx(pi, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            ppv(0.0, 7)
        with pytest.raises(DomainError):
            ppv(0.5, 0.0)
        with pytest.raises(DomainError):
            ppv(0.5, math.nan)

    def test_log_odds_consistency(self):
        rng = np.random.default_rng(1)
        for _ in range(500):
            pi = float(rng.uniform(0.01, 0.99))
            lam = float(10 ** rng.uniform(-2, 6))
            lo = posterior_log_odds(pi, lam)
            assert 1.0 / (1.0 + math.exp(-lo)) == pytest.approx(ppv(pi, lam), abs=1e-12)

    def test_log_odds_fixtures(self):
        assert posterior_log_odds(0.5, 1.0) == pytest.approx(0.0, abs=1e-12)
        assert posterior_log_odds(0.10, 7) == pytest.approx(math.log(7.0 / 9.0), abs=1e-12)
        assert posterior_log_odds(0.10, 16) == pytest.approx(math.log(16.0 / 9.0), abs=1e-12)


class TestRequiredLeverage:
    def test_reference_table(self):
        assert lambda_required(0.95, 0.10) == pytest.approx(171.0, rel=1e-12)
        assert lambda_required(0.95, 0.01) == pytest.approx(1881.0, rel=1e-12)
        assert lambda_required(0.5, 0.5) == pytest.approx(1.0, abs=1e-12)
        assert lambda_required(0.95, 0.50) == pytest.approx(19.0, rel=1e-12)
        assert lambda_required(0.95, 1e-5) == pytest.approx(1.9e6, rel=1e-3)


class TestCeiling:
    # power -> 1 supremum at fixed alpha; five published reference values
    reference = [(0.50, 0.952), (0.30, 0.896), (0.10, 0.689), (0.05, 0.513), (0.01, 0.168)]

    @pytest.mark.parametrize("pi,expected", reference)
    def test_reference_values(self, pi, expected):
        # published values round to 0.1 percentage point
        assert ppv_ceiling(pi, 0.05) == pytest.approx(expected, abs=1e-3)

    def test_is_power_one_limit(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            pi = float(rng.uniform(0.001, 0.999))
            alpha = float(rng.uniform(0.001, 0.5))
            assert ppv_ceiling(pi, alpha) == pytest.approx(
                ppv(pi, 1.0 / alpha), rel=1e-12)


class TestPsiAndCriticalPrior:
    def test_psi_fixtures(self):
        assert psi(0.95, 0.10, OperatingPoint(0.05, 0.35)) == pytest.approx(24.4, abs=0.05)
        assert psi(0.95, 0.30, OperatingPoint(0.05, 0.80)) == pytest.approx(2.77, abs=0.005)

    def test_psi_is_one_at_critical_prior(self):
        rng = np.random.default_rng(3)
        for _ in range(300):
            op = OperatingPoint(float(rng.uniform(0.001, 0.2)),
                                float(rng.uniform(0.2, 1.0)))
            tau = float(rng.uniform(0.5, 0.999))
            assert psi(tau, pi_crit(tau, op), op) == pytest.approx(1.0, rel=1e-10)

    critical_priors = [
        (0.05, 0.80, 0.543, 5e-4), (0.05, 0.50, 0.655, 5e-4), (0.05, 0.30, 0.760, 5e-4),
        (0.01, 0.80, 0.192, 5e-4), (0.005, 0.80, 0.106, 5e-4), (5e-8, 0.80, 1.2e-6, 5e-8),
    ]

    @pytest.mark.parametrize("alpha,power,expected,tol", critical_priors)
    def test_reference_table(self, alpha, power, expected, tol):
        got = pi_crit(0.95, OperatingPoint(alpha, power))
        assert got == pytest.approx(expected, abs=tol)


class TestMajorityFalseThreshold:
    def test_fixtures(self):
        assert pi_half(OperatingPoint(0.05, 0.80)) == pytest.approx(1.0 / 17.0, rel=1e-12)
        assert pi_half(OperatingPoint(0.05, 0.35)) == pytest.approx(0.125, rel=1e-12)
        assert pi_half(OperatingPoint(0.5, 0.5)) == pytest.approx(0.5, rel=1e-12)


class TestCostOfDiscovery:
    # (pi, alpha, power) -> published waste ratio
    fields = [
        (0.02, 0.05, 0.50, 4.9, 0.05),
        (0.10, 0.05, 0.35, 1.29, 0.005),
        (0.30, 0.05, 0.80, 0.146, 0.0005),
    ]

    @pytest.mark.parametrize("pi,alpha,power,expected,tol", fields)
    def test_fixtures(self, pi, alpha, power, expected, tol):
        assert cost_of_discovery(pi, OperatingPoint(alpha, power)) == pytest.approx(expected, abs=tol)

    def test_equals_odds_against(self):
        rng = np.random.default_rng(4)
        for _ in range(500):
            pi = float(rng.uniform(0.001, 0.999))
            op = OperatingPoint(float(rng.uniform(0.001, 0.5)),
                                float(rng.uniform(0.05, 1.0)))
            p = ppv(pi, op.leverage)
            assert cost_of_discovery(pi, op) == pytest.approx((1 - p) / p, rel=1e-12)


class TestNpv:
    def test_fixtures(self):
        assert npv(0.10, OperatingPoint(0.05, 0.35)) == pytest.approx(0.929, abs=1e-3)
        assert npv(0.5, OperatingPoint(0.05, 0.95)) == pytest.approx(0.95, abs=1e-12)
        assert npv(0.001, OperatingPoint(0.05, 0.8)) == pytest.approx(0.99979, abs=1e-5)


class TestMisinfoFloor:
    def test_complement_of_ceiling(self):
        assert misinfo_floor(0.10, 0.05) == pytest.approx(1 - 0.689, abs=1e-3)
        assert misinfo_floor(0.5, 0.05) == pytest.approx(0.048, abs=5e-4)
        rng = np.random.default_rng(5)
        for _ in range(300):
            pi = float(rng.uniform(0.001, 0.999))
            alpha = float(rng.uniform(0.001, 0.5))
            assert misinfo_floor(pi, alpha) == pytest.approx(
                1.0 - ppv_ceiling(pi, alpha), abs=1e-14)

    def test_vanishing_alpha(self):
        assert misinfo_floor(0.3, 1e-12) == pytest.approx(0.0, abs=1e-10)


class TestAlphaMax:
    def test_fixtures(self):
        assert alpha_max(0.10, 0.80, 0.95) == pytest.approx(0.0047, abs=5e-5)
        assert alpha_max(0.05, 0.50, 0.95) == pytest.approx(0.00138, abs=1e-5)

    def test_clamped_at_one(self):
        assert alpha_max(0.5, 1.0, 0.5) == 1.0
        assert alpha_max(0.9, 1.0, 0.5) == 1.0

    def test_alpha_at_alpha_max_meets_target(self):
        rng = np.random.default_rng(6)
        for _ in range(300):
            pi = float(rng.uniform(0.01, 0.99))
            power = float(rng.uniform(0.1, 1.0))
            tau = float(rng.uniform(0.5, 0.99))
            am = alpha_max(pi, power, tau)
            if am < 1.0:
                assert ppv(pi, power / am) == pytest.approx(tau, rel=1e-9)


class TestDiagnose:
    def test_worked_example(self):
        d = diagnose(StudyContext(0.05, 0.95), OperatingPoint(0.05, 0.50))
        assert d.leverage == pytest.approx(10.0)
        assert d.ppv == pytest.approx(0.34, abs=5e-3)
        assert d.psi == pytest.approx(36.0, abs=0.2)
        assert d.ceiling == pytest.approx(0.51, abs=5e-3)
        assert d.regime is Regime.MAJORITY_FALSE

    def test_low_prior_tight_alpha_is_feasible(self):
        d = diagnose(StudyContext(1e-5, 0.95), OperatingPoint(5e-8, 0.80))
        assert d.leverage == pytest.approx(1.6e7)
        assert d.ppv == pytest.approx(0.994, abs=1e-3)
        assert d.regime is Regime.FEASIBLE
        assert d.min_pipeline_depth == 1

    def test_majority_false_takes_precedence(self):
        # ppv 0.4375 < 1/2 and psi > 1 both hold; the severer regime wins
        d = diagnose(StudyContext(0.10, 0.95), OperatingPoint(0.05, 0.35))
        assert d.ppv == pytest.approx(0.4375, abs=1e-12)
        assert d.ceiling == pytest.approx(0.689, abs=1e-3)
        assert d.regime is Regime.MAJORITY_FALSE

    def test_infeasible_band(self):
        d = diagnose(StudyContext(0.30, 0.95), OperatingPoint(0.05, 0.80))
        assert d.regime is Regime.INFEASIBLE

    def test_no_finite_depth_marker(self):
        d = diagnose(StudyContext(0.3, 0.95), OperatingPoint(0.05, 0.05))
        assert d.min_pipeline_depth is None

    def test_invariants_on_random_inputs(self):
        rng = np.random.default_rng(7)
        for _ in range(500):
            ctx = StudyContext(float(rng.uniform(0.001, 0.999)),
                               float(rng.uniform(0.05, 0.999)))
            op = OperatingPoint(float(rng.uniform(0.001, 0.5)),
                                float(rng.uniform(0.05, 1.0)))
            d = diagnose(ctx, op)
            assert d.ppv <= d.ceiling + 1e-15
            if d.regime is Regime.MAJORITY_FALSE:
                assert d.ppv < 0.5
            if d.regime is Regime.FEASIBLE:
                assert d.psi <= 1.0
            assert d.waste_ratio == pytest.approx((1 - d.ppv) / d.ppv, rel=1e-12)

    def test_to_dict_round_values(self):
        d = diagnose(StudyContext(0.10, 0.95), OperatingPoint(0.05, 0.80))
        payload = d.to_dict()
        assert payload["regime"] == "infeasible"
        assert payload["min_pipeline_depth"] == 2
        assert isinstance(payload["ppv"], float)


class TestClassify:
    def test_boundary_order(self):
        # along a prior sweep at fixed leverage the regime can only improve
        lam = 16.0
        tau = 0.95
        regimes = [classify(tau, pi, lam) for pi in np.linspace(0.001, 0.999, 2000)]
        order = {Regime.MAJORITY_FALSE: 0, Regime.INFEASIBLE: 1, Regime.FEASIBLE: 2}
        ranks = [order[r] for r in regimes]
        assert ranks == sorted(ranks)
