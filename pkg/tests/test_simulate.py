"""Monte Carlo simulator: refusals, determinism, agreement with closed forms."""

from __future__ import annotations

import csv

import pytest

from bountygame import DomainError, InfeasibleScenarioError, SimMode, simulate
from bountygame._kernels import HAS_NUMBA
from bountygame.simulate import CHUNK_TRIALS


def test_rejects_bad_trial_and_seed_arguments(s0_params, s0_curves, s0_decision):
    with pytest.raises(DomainError):
        simulate(s0_params, s0_decision, s0_curves, 0, 1, SimMode.WITH_BBP)
    with pytest.raises(DomainError):
        simulate(s0_params, s0_decision, s0_curves, 10, -1, SimMode.WITH_BBP)
    with pytest.raises(DomainError):
        simulate(s0_params, s0_decision, s0_curves, 10, 2**64, SimMode.WITH_BBP)
    with pytest.raises(ValueError):
        simulate(s0_params, s0_decision, s0_curves, 10, 1, "with-bbp")


def test_refuses_infeasible_effort_profile(s0_params, s0_curves, s0_decision):
    with pytest.raises(InfeasibleScenarioError, match="leave"):
        simulate(
            s0_params, s0_decision.replace(p_s=100.0), s0_curves, 10, 1, SimMode.WITH_BBP
        )


def test_refuses_split_effort_regime(s0_params, s0_curves, s0_decision):
    with pytest.raises(InfeasibleScenarioError, match="split-effort"):
        simulate(
            s0_params, s0_decision.replace(p_ns=2.0), s0_curves, 10, 1, SimMode.WITH_BBP
        )


def test_refuses_nonsevere_mass_above_one(s0_params, s0_curves):
    # A high severe bounty keeps the regime concentrated while p_ns = 2.5
    # gives the five non-experts 0.4 win probability each: individually
    # fine, collectively an impossible 2.0.
    from bountygame import VendorDecision

    dec = VendorDecision(t=2.0, p_s=8.0, p_ns=2.5)
    with pytest.raises(InfeasibleScenarioError, match="finder mass exceeds 1"):
        simulate(s0_params, dec, s0_curves, 10, 1, SimMode.WITH_BBP)


def test_with_program_frequencies_match_closed_forms(s0_params, s0_curves, s0_decision):
    trials = 200_000
    out = simulate(s0_params, s0_decision, s0_curves, trials, 1, SimMode.WITH_BBP)
    expected = {
        "freq_severe_ewhh": 0.5 * 3 * 0.12755102040816327,
        "freq_severe_bhh": 0.5 * 4 * 0.15433673469387754,
        "freq_severe_none": 0.5,
        "freq_nonsevere_newhh": 0.8 * 5 * 0.08,
        "freq_nonsevere_user": 0.8 * (1 - 5 * 0.08),
        "freq_nonsevere_none": 0.2,
    }
    for name, p in expected.items():
        se = (p * (1 - p) / trials) ** 0.5
        assert abs(getattr(out, name) - p) <= 3 * se, name
    assert abs(out.mean_profit - 81.53474489795917) <= 3 * out.std_error
    assert out.freq_severe_ewhh + out.freq_severe_bhh + out.freq_severe_none == pytest.approx(
        1.0, abs=1e-12
    )
    assert (
        out.freq_nonsevere_newhh + out.freq_nonsevere_user + out.freq_nonsevere_none
        == pytest.approx(1.0, abs=1e-12)
    )


def test_without_program_frequencies_match_closed_forms(s0_params, s0_curves, s0_decision):
    trials = 200_000
    out = simulate(s0_params, s0_decision, s0_curves, trials, 2, SimMode.WITHOUT_BBP)
    p_ewhh = 0.5 * 3 * (5.0 / 42.0)
    se = (p_ewhh * (1 - p_ewhh) / trials) ** 0.5
    assert abs(out.freq_severe_ewhh - p_ewhh) <= 3 * se
    # Bounties are forced to zero, so no non-expert ever wins.
    assert out.freq_nonsevere_newhh == 0.0
    assert abs(out.mean_profit - 77.77142857142857) <= 3 * out.std_error


def test_identical_bytes_per_seed_across_chunk_boundary(s0_params, s0_curves, s0_decision):
    trials = CHUNK_TRIALS + 3
    first = simulate(s0_params, s0_decision, s0_curves, trials, 42, SimMode.WITH_BBP)
    second = simulate(s0_params, s0_decision, s0_curves, trials, 42, SimMode.WITH_BBP)
    assert first.to_json() == second.to_json()
    other = simulate(s0_params, s0_decision, s0_curves, trials, 43, SimMode.WITH_BBP)
    assert other.to_json() != first.to_json()


@pytest.mark.skipif(not HAS_NUMBA, reason="numba unavailable")
def test_backends_agree_bit_for_bit(s0_params, s0_curves, s0_decision):
    kwargs = dict(trials=50_000, seed=7, mode=SimMode.WITH_BBP)
    fast = simulate(s0_params, s0_decision, s0_curves, impl="numba", **kwargs)
    plain = simulate(s0_params, s0_decision, s0_curves, impl="numpy", **kwargs)
    assert fast.to_json() == plain.to_json()


def test_trace_file_has_one_labeled_row_per_trial(
    s0_params, s0_curves, s0_decision, tmp_path
):
    path = tmp_path / "trace.csv"
    simulate(
        s0_params, s0_decision, s0_curves, 50, 5, SimMode.WITH_BBP, trace_path=str(path)
    )
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["trial", "severe_event", "nonsevere_event", "cost"]
    body = rows[1:]
    assert len(body) == 50
    assert [int(r[0]) for r in body] == list(range(50))
    for _, severe, nonsevere, cost in body:
        assert severe in {"none", "ewhh", "bhh"}
        assert nonsevere in {"none", "newhh", "user"}
        float(cost)
