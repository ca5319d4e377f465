"""Vendor stage: bounties, feasibility band, profits, release timing."""

from __future__ import annotations

import math

import pytest

from bountygame import (
    FeasibilityWarning,
    InfeasibleScenarioError,
    NonConcaveObjectiveError,
    ReleaseCurves,
    VendorDecision,
    concentrated_bbp_profit,
    condition1,
    corner_equilibrium,
    optimal_bounties,
    optimal_release_no_bbp,
    optimal_release_with_bbp,
    optimal_whh_count,
    profit_decomposition_check,
    profit_with_bbp,
    profit_without_bbp,
    release_gap_term,
    success_probabilities,
)
from bountygame.vendor import _concentrated_prime, _profit_nb_prime


def test_baseline_optimal_bounties(s0_params, s0_curves):
    ob = optimal_bounties(s0_params, s0_curves, 2.0)
    assert ob.p_s == pytest.approx(2.5, abs=1e-12)
    assert ob.p_ns == pytest.approx(0.5, abs=1e-15)
    assert ob.bbp_viable


def test_baseline_condition1_band(s0_params, s0_curves):
    band = condition1(s0_params, s0_curves, 2.0)
    # base = 42 / (4 * 0.5) = 21, TC_s / c_w = 20, second lb branch is -57.
    assert band.lb == pytest.approx(1.0, abs=1e-12)
    assert band.ub == pytest.approx(41.0, abs=1e-12)
    assert band.gap_value == pytest.approx(3.5, abs=1e-15)
    assert band.feasible


def test_negative_optimal_bounty_reported_not_clamped(s0_params, s0_curves):
    # By t = 3 the severity likelihood has decayed enough that
    # p_s* = 19.5 + 4 - base(t) turns negative.
    ob = optimal_bounties(s0_params, s0_curves, 3.0)
    assert ob.p_s < 0.0
    assert not ob.bbp_viable


def test_baseline_profit_with_bbp_breakdown(s0_params, s0_curves, s0_decision):
    got = profit_with_bbp(s0_params, s0_decision, s0_curves)
    assert got.revenue == 95.0
    assert got.bhh_exploit_cost == pytest.approx(0.5 * 4 * 0.15433673469387754 * 40, abs=1e-12)
    assert got.severe_bounty_cost == pytest.approx(0.5 * 3 * 0.12755102040816327 * 2.5, abs=1e-12)
    assert got.nonsevere_bounty_cost == pytest.approx(0.4 * 0.4, abs=1e-12)
    assert got.user_discovery_cost == pytest.approx(0.8 * 1.0 * 0.6, abs=1e-12)
    assert got.uncoordinated_disclosure_cost == 0.0
    assert got.total == pytest.approx(81.53474489795917, abs=1e-9)


def test_baseline_profit_without_bbp_breakdown(s0_params, s0_curves):
    got = profit_without_bbp(s0_params, 2.0, s0_curves)
    p_e0 = 5.0 / 42.0
    p_b0 = 0.16071428571428573
    assert got.bhh_exploit_cost == pytest.approx(0.5 * 4 * p_b0 * 40, abs=1e-12)
    assert got.uncoordinated_disclosure_cost == pytest.approx(
        0.5 * 3 * p_e0 * 0.5 * 40, abs=1e-12
    )
    assert got.user_discovery_cost == pytest.approx(0.8, abs=1e-15)
    assert got.severe_bounty_cost == 0.0
    assert got.nonsevere_bounty_cost == 0.0
    assert got.total == pytest.approx(77.77142857142857, abs=1e-9)


def test_baseline_program_margin_decomposes(s0_params, s0_curves):
    margin = (
        concentrated_bbp_profit(s0_params, s0_curves, 2.0)
        - profit_without_bbp(s0_params, 2.0, s0_curves).total
    )
    competitive = 12 * 0.25 * 6.25 / (6 * 49 * 2.0)
    nonsevere = (0.8 * 0.5) ** 2
    disclosure = 3 * 0.5 * 0.5 * 40 * (5.0 / 42.0)
    assert margin == pytest.approx(competitive + nonsevere + disclosure, abs=1e-9)
    assert abs(profit_decomposition_check(s0_params, s0_curves, 2.0)) <= 1e-9


def test_profit_warns_outside_its_regime(s0_params, s0_curves, s0_decision):
    with pytest.warns(FeasibilityWarning):
        profit_with_bbp(s0_params, s0_decision.replace(p_ns=2.0), s0_curves)
    with pytest.warns(FeasibilityWarning):
        profit_with_bbp(s0_params, s0_decision.replace(p_s=100.0), s0_curves)


def test_profit_without_bbp_clamps_probabilities(s0_params, s0_curves):
    # One expert against one black hat with a huge exploit prize pushes the
    # zero-bounty probabilities past their clamps: p_b0 -> 1, p_e0 -> 0.
    params = s0_params.replace(n=1, m=1, W=20.0, c_b=1.1, r_s=0.0)
    got = profit_without_bbp(params, 0.0, s0_curves)
    ks = 0.9
    assert got.bhh_exploit_cost == pytest.approx(ks * 1 * 1.0 * 40, abs=1e-12)
    assert got.uncoordinated_disclosure_cost == 0.0
    assert got.total == pytest.approx(100.0 - 36.0 - 0.95, abs=1e-12)


def test_severe_probability_crossing_at_hand_value(s0_params, s0_curves):
    # The two race probabilities cross where the cost-adjusted prizes are
    # equal: p_s = c_w W / c_b - r_s = 7, both sides landing on 1/7.
    dec = VendorDecision(t=2.0, p_s=7.0, p_ns=0.0)
    probs = success_probabilities(
        s0_params, dec, s0_curves, corner_equilibrium(s0_params, dec, s0_curves)
    )
    assert probs.p_e_s == pytest.approx(1.0 / 7.0, abs=1e-15)
    assert probs.p_b_s == pytest.approx(1.0 / 7.0, abs=1e-15)


def test_release_without_program_interior_optimum(s0_params, s0_curves):
    nb = optimal_release_no_bbp(s0_params, s0_curves)
    assert not nb.boundary
    assert 0.0 < nb.t < s0_curves.t_max
    assert abs(nb.foc_value) <= 1e-6
    assert nb.profit == pytest.approx(
        profit_without_bbp(s0_params, nb.t, s0_curves).total, abs=1e-12
    )
    for dt in (-0.5, -0.05, 0.05, 0.5):
        assert (
            profit_without_bbp(s0_params, nb.t + dt, s0_curves).total
            <= nb.profit + 1e-12
        )


def test_release_with_program_stops_at_viability_edge(s0_params, s0_curves):
    # At the baseline the concentrated profit is still rising when the
    # bounty program stops being viable, so the optimum pins to the edge
    # of the feasibility band and is flagged as a boundary solution.
    bbp = optimal_release_with_bbp(s0_params, s0_curves)
    nb = optimal_release_no_bbp(s0_params, s0_curves)
    assert bbp.boundary
    assert bbp.t < nb.t
    assert bbp.profit > nb.profit
    assert bbp.p_s == pytest.approx(0.0, abs=1e-9)
    assert bbp.p_ns == pytest.approx(0.5, abs=1e-12)


def test_release_boundary_at_zero_when_waiting_never_pays(s0_params, s0_curves):
    # Negligible bug costs leave only the falling revenue, so release now.
    params = s0_params.replace(TC_s=2.0, TC_ns=0.5)
    curves = s0_curves.replace(K_s0=0.2, K_ns0=0.2)
    nb = optimal_release_no_bbp(params, curves)
    assert nb.boundary
    assert nb.t == 0.0


def test_release_rejects_multi_peaked_profit(s0_params, s0_curves):
    class WavyRevenue(ReleaseCurves):
        def revenue(self, t: float) -> float:
            return super().revenue(t) + (5.0 / 3.0) * math.sin(3.0 * t)

        def revenue_prime(self, t: float) -> float:
            return super().revenue_prime(t) + 5.0 * math.cos(3.0 * t)

    wavy = WavyRevenue(**s0_curves.to_dict())
    with pytest.raises(NonConcaveObjectiveError) as err:
        optimal_release_no_bbp(s0_params, wavy)
    assert len(err.value.roots) >= 2


def test_no_viable_program_anywhere_is_structured(s0_params, s0_curves):
    params = s0_params.replace(W=0.0)
    curves = s0_curves.replace(K_s0=0.2)
    band = condition1(params, curves, 0.0)
    assert not band.feasible
    with pytest.raises(InfeasibleScenarioError):
        optimal_release_with_bbp(params, curves)


def test_analytic_release_slopes_match_finite_differences(s0_params, s0_curves):
    h = 1e-5
    for t in (0.5, 1.0, 2.0):
        fd_nb = (
            profit_without_bbp(s0_params, t + h, s0_curves).total
            - profit_without_bbp(s0_params, t - h, s0_curves).total
        ) / (2 * h)
        assert _profit_nb_prime(s0_params, s0_curves, t) == pytest.approx(
            fd_nb, rel=1e-6
        )
        fd_conc = (
            concentrated_bbp_profit(s0_params, s0_curves, t + h)
            - concentrated_bbp_profit(s0_params, s0_curves, t - h)
        ) / (2 * h)
        assert _concentrated_prime(s0_params, s0_curves, t) == pytest.approx(
            fd_conc, rel=1e-6
        )
        gap = release_gap_term(s0_params, s0_curves, t)
        assert gap == pytest.approx(
            _concentrated_prime(s0_params, s0_curves, t)
            - _profit_nb_prime(s0_params, s0_curves, t),
            rel=1e-9,
        )
        assert gap < 0.0


def test_optimal_whh_count_report(s0_params, s0_curves):
    report = optimal_whh_count(s0_params, s0_curves, 2.0)
    assert report.n_quadratic == 2.5
    assert report.n_closed_form == pytest.approx(
        math.sqrt(9 * 16 - 10 * 4 + 1) / 4.0 - 3.0 / 4.0, abs=1e-12
    )
    assert report.n_brute_force == 16  # monotone profit in n; hits the 4m cap
    assert "not a root" in report.note
    assert "(m+1)/2" in report.note
