"""Event-level Monte Carlo of one release under the equilibrium race.

Each trial realizes one release: the severe bug exists with probability
K_s(t) and, if it does, somebody finds it first (the severe race always
has a winner); the non-severe bug exists with probability K_ns(t) and is
found by a non-expert white hat or by a user. Costs accrue per the
program mode and the empirical mean profit converges to the analytic
expected profit, which is what the verification suite checks.

Determinism contract: trials are processed in fixed-size chunks and chunk
i draws its uniforms from a counter-based Philox generator keyed with
(seed, i). Per-chunk sums use compensated (fsum) accumulation and chunks
are combined in index order, so results are bit-identical for a given
(seed, trials) regardless of kernel backend or how work is scheduled.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .errors import DomainError, InfeasibleScenarioError
from .hackers import Regime, equilibrium, success_probabilities
from .scenario import (
    CurveSet,
    MarketParams,
    VendorDecision,
    k_nonsevere,
    k_severe,
    revenue,
)

__all__ = ["SimMode", "SimOutcome", "simulate", "CHUNK_TRIALS"]

CHUNK_TRIALS = 1 << 18

_SEVERE_LABELS = {0: "none", 1: "ewhh", 2: "bhh"}
_NONSEVERE_LABELS = {0: "none", 1: "newhh", 2: "user"}


class SimMode(Enum):
    WITH_BBP = "with_bbp"
    WITHOUT_BBP = "without_bbp"


@dataclass(frozen=True)
class SimOutcome:
    """Aggregate of one simulation run.

    The two frequency triples each sum to 1 up to rounding. ``std_error``
    is the standard error of the mean profit estimate.
    """

    trials: int
    freq_severe_ewhh: float
    freq_severe_bhh: float
    freq_severe_none: float
    freq_nonsevere_newhh: float
    freq_nonsevere_user: float
    freq_nonsevere_none: float
    mean_profit: float
    std_error: float

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "freq_severe_ewhh": self.freq_severe_ewhh,
            "freq_severe_bhh": self.freq_severe_bhh,
            "freq_severe_none": self.freq_severe_none,
            "freq_nonsevere_newhh": self.freq_nonsevere_newhh,
            "freq_nonsevere_user": self.freq_nonsevere_user,
            "freq_nonsevere_none": self.freq_nonsevere_none,
            "mean_profit": self.mean_profit,
            "std_error": self.std_error,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _chunk_uniforms(seed: int, index: int, count: int) -> np.ndarray:
    key = np.array([seed, index], dtype=np.uint64)
    rng = np.random.Generator(np.random.Philox(key=key))
    return rng.random((count, 4))


def simulate(
    params: MarketParams,
    decision: VendorDecision,
    curves: CurveSet,
    trials: int,
    seed: int,
    mode: SimMode,
    trace_path: str | None = None,
    impl: str | None = None,
) -> SimOutcome:
    """Run the release simulation and return aggregate outcome statistics.

    ``mode`` picks the cost semantics: with a program, an expert severe
    find costs the severe bounty and a non-expert non-severe find the
    non-severe bounty; without one, bounties are forced to zero, an expert
    severe find costs the uncoordinated-disclosure fraction x of the
    exploit cost, and every existing non-severe bug costs the
    user-discovery amount. Refuses scenarios whose equilibrium
    probabilities are clipped or fail to normalize, since the categorical
    draw would be meaningless. ``trace_path`` optionally streams one CSV
    row per trial (large files; off by default).
    """
    if trials < 1:
        raise DomainError("trials must be at least 1")
    if seed < 0 or seed > 2**64 - 1:
        raise DomainError("seed must fit in an unsigned 64-bit integer")
    mode = SimMode(mode)

    if mode is SimMode.WITHOUT_BBP:
        effective = VendorDecision(t=decision.t, p_s=0.0, p_ns=0.0)
    else:
        effective = decision

    profile = equilibrium(params, effective, curves)
    probs = success_probabilities(params, effective, curves, profile)
    if not profile.feasible:
        raise InfeasibleScenarioError(
            "equilibrium efforts leave [0, 1]; not simulating an infeasible profile"
        )
    if probs.any_clipped:
        raise InfeasibleScenarioError(
            f"success probabilities clipped ({', '.join(probs.clipped)}); "
            "the categorical masses would not normalize"
        )
    if profile.regime is Regime.INTERIOR and probs.p_e_ns > 0.0:
        raise InfeasibleScenarioError(
            "split-effort regime gives experts non-severe mass, which the "
            "two-way non-severe race cannot represent"
        )

    q_e = params.n * probs.p_e_s
    q_ne = params.l * probs.p_ne_ns
    if abs(q_e + params.m * probs.p_b_s - 1.0) > 1e-9:
        raise InfeasibleScenarioError("severe-race probabilities do not sum to 1")
    if q_ne > 1.0:
        raise InfeasibleScenarioError("non-severe finder mass exceeds 1")

    ks = float(k_severe(curves, decision.t))
    kns = float(k_nonsevere(curves, decision.t))
    if mode is SimMode.WITH_BBP:
        cost_e = effective.p_s
        cost_ne = effective.p_ns
    else:
        cost_e = params.x * params.TC_s
        cost_ne = 0.0
    cost_b = params.TC_s
    cost_user = params.TC_ns

    counts_severe = np.zeros(3, dtype=np.int64)
    counts_nonsevere = np.zeros(3, dtype=np.int64)
    chunk_sums: list[float] = []
    chunk_sq_sums: list[float] = []

    writer = None
    trace_file = None
    if trace_path is not None:
        trace_file = open(trace_path, "w", newline="")
        writer = csv.writer(trace_file, lineterminator="\n")
        writer.writerow(["trial", "severe_event", "nonsevere_event", "cost"])

    try:
        done = 0
        index = 0
        while done < trials:
            count = min(CHUNK_TRIALS, trials - done)
            u = _chunk_uniforms(seed, index, count)
            sev, ns, costs = _kernels.classify_trials(
                u, ks, kns, q_e, q_ne, cost_e, cost_b, cost_ne, cost_user, impl=impl
            )
            counts_severe += np.bincount(sev, minlength=3)[:3]
            counts_nonsevere += np.bincount(ns, minlength=3)[:3]
            cost_values = costs.tolist()
            chunk_sums.append(math.fsum(cost_values))
            chunk_sq_sums.append(math.fsum(c * c for c in cost_values))
            if writer is not None:
                for i in range(count):
                    writer.writerow(
                        [
                            done + i,
                            _SEVERE_LABELS[int(sev[i])],
                            _NONSEVERE_LABELS[int(ns[i])],
                            repr(float(costs[i])),
                        ]
                    )
            done += count
            index += 1
    finally:
        if trace_file is not None:
            trace_file.close()

    total_cost = math.fsum(chunk_sums)
    total_sq = math.fsum(chunk_sq_sums)
    mean_cost = total_cost / trials
    if trials > 1:
        variance = max(0.0, (total_sq - trials * mean_cost * mean_cost) / (trials - 1))
        std_error = math.sqrt(variance / trials)
    else:
        std_error = 0.0

    return SimOutcome(
        trials=trials,
        freq_severe_ewhh=float(counts_severe[1]) / trials,
        freq_severe_bhh=float(counts_severe[2]) / trials,
        freq_severe_none=float(counts_severe[0]) / trials,
        freq_nonsevere_newhh=float(counts_nonsevere[1]) / trials,
        freq_nonsevere_user=float(counts_nonsevere[2]) / trials,
        freq_nonsevere_none=float(counts_nonsevere[0]) / trials,
        mean_profit=revenue(curves, decision.t) - mean_cost,
        std_error=std_error,
    )
