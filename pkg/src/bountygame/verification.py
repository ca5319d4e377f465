"""Randomized verification of the model's claims over feasible populations.

Everything here treats the closed forms in the other modules as claims to
be checked, not as ground truth. A seeded rejection sampler produces
populations of feasible scenarios, and each verifier evaluates one claim
draw by draw: the severe-bounty monotonicity of the race probabilities,
the profit ranking of running a program versus not, the earlier optimal
release with a program, and the batch of algebraic identities the closed
forms must satisfy. Reports carry every offending parameter set so a
failure is reproducible from the report alone.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    InfeasibleScenarioError,
    NonConcaveObjectiveError,
)
from .hackers import (
    Regime,
    corner_equilibrium,
    equilibrium,
    interior_equilibrium,
    select_regime,
    success_probabilities,
)
from .scenario import MarketParams, ReleaseCurves, VendorDecision, k_nonsevere, k_severe, validate
from .vendor import (
    _profit_nb_prime,
    concentrated_bbp_profit,
    condition1,
    optimal_bounties,
    optimal_release_no_bbp,
    optimal_release_with_bbp,
    profit_decomposition_check,
    profit_with_bbp,
    profit_without_bbp,
    release_gap_term,
)

__all__ = [
    "SampledScenario",
    "FeasibleSampler",
    "PropositionReport",
    "DEFAULT_RANGES",
    "verify_proposition_1",
    "verify_proposition_2",
    "verify_proposition_3",
    "figure1_sweep",
    "identity_suite",
    "run_full_suite",
]


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

DEFAULT_RANGES: dict[str, tuple[float, float]] = {
    "n": (1, 10),
    "l": (1, 20),
    "m": (1, 10),
    "c_w": (1.1, 5.0),
    "c_b": (1.1, 5.0),
    "r_s": (0.0, 5.0),
    "W": (0.0, 20.0),
    "TC_s": (10.0, 200.0),
    "TC_ns": (0.1, 5.0),
    "x": (0.05, 0.95),
    "K_s0": (0.2, 1.0),
    "K_ns0": (0.2, 1.0),
    "lambda_s": (0.05, 0.4),
    "lambda_ns": (0.05, 0.4),
    "R0": (50.0, 500.0),
    "a": (0.5, 5.0),
    "b": (0.0, 2.0),
    "t_max": (10.0, 10.0),
}

_MAX_PROPOSALS = 200_000
_EFFORT_CAP = 0.99
_PROB_MARGIN = 1e-6


@dataclass(frozen=True)
class SampledScenario:
    """One draw: market, curves, and a vendor decision to evaluate at."""

    params: MarketParams
    curves: ReleaseCurves
    decision: VendorDecision

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "curves": self.curves.to_dict(),
            "decision": self.decision.to_dict(),
        }


class FeasibleSampler:
    """Seeded rejection sampler over the documented parameter ranges.

    Proposals are uniform over ``ranges`` (integer-valued for the head
    counts). The feasible tiers reject until a draw passes validation,
    the bounty-viability band at its release time, and effort/probability
    feasibility with working margins; ``draw_raw`` skips everything except
    validation and exists for claims that must hold on arbitrary inputs.
    Identical seeds give identical draw sequences.
    """

    def __init__(self, seed: int, ranges: dict[str, tuple[float, float]] | None = None):
        self.seed = seed
        self.ranges = dict(DEFAULT_RANGES)
        if ranges:
            unknown = set(ranges) - set(DEFAULT_RANGES)
            if unknown:
                raise DomainError(f"unknown sampler range keys: {sorted(unknown)}")
            self.ranges.update(ranges)
        self._rng = np.random.Generator(np.random.Philox(seed))
        self.proposals = 0

    # -- proposal pieces ---------------------------------------------------

    def _uniform(self, name: str) -> float:
        lo, hi = self.ranges[name]
        return float(lo + (hi - lo) * self._rng.random())

    def _integer(self, name: str) -> int:
        lo, hi = self.ranges[name]
        return int(self._rng.integers(int(lo), int(hi) + 1))

    def _propose(self) -> SampledScenario:
        self.proposals += 1
        params = MarketParams(
            n=self._integer("n"),
            l=self._integer("l"),
            m=self._integer("m"),
            c_w=self._uniform("c_w"),
            c_b=self._uniform("c_b"),
            r_s=self._uniform("r_s"),
            W=self._uniform("W"),
            TC_s=self._uniform("TC_s"),
            TC_ns=self._uniform("TC_ns"),
            x=self._uniform("x"),
        )
        curves = ReleaseCurves(
            K_s0=self._uniform("K_s0"),
            lambda_s=self._uniform("lambda_s"),
            K_ns0=self._uniform("K_ns0"),
            lambda_ns=self._uniform("lambda_ns"),
            R0=self._uniform("R0"),
            a=self._uniform("a"),
            b=self._uniform("b"),
            t_max=self._uniform("t_max"),
        )
        t = curves.t_max * float(self._rng.random())
        p_s = 10.0 * float(self._rng.random())
        # Bias the non-severe bounty around the regime boundary so both
        # equilibrium families are represented in the population.
        ks = curves.k_severe(t)
        kns = curves.k_nonsevere(t)
        boundary = (
            ks
            * (params.r_s + p_s)
            * (params.n + params.l)
            / ((params.n + params.m) * params.c_w * kns)
        )
        if self._rng.random() < 0.5:
            p_ns = boundary * float(self._rng.random())
        else:
            p_ns = boundary * (1.0 + float(self._rng.random()))
        return SampledScenario(params, curves, VendorDecision(t=t, p_s=p_s, p_ns=p_ns))

    def _accept_loop(self, predicate) -> SampledScenario:
        for _ in range(_MAX_PROPOSALS):
            scen = self._propose()
            if not validate(scen.params, scen.curves).passed:
                continue
            result = predicate(scen)
            if result is not None:
                return result
        raise RuntimeError(
            f"no feasible draw found in {_MAX_PROPOSALS} proposals; ranges too tight"
        )

    # -- tiers ---------------------------------------------------------------

    def draw_raw(self) -> SampledScenario:
        """A validated draw with no feasibility filtering at all."""
        return self._accept_loop(lambda scen: scen)

    def _margins_ok(self, scen: SampledScenario) -> bool:
        profile = equilibrium(scen.params, scen.decision, scen.curves)
        if not profile.feasible:
            return False
        if max(profile.alpha_s, profile.alpha_ns, profile.beta_ns, profile.mu_s) > _EFFORT_CAP:
            return False
        if profile.regime is Regime.INTERIOR and profile.alpha_s < _PROB_MARGIN:
            return False
        probs = success_probabilities(scen.params, scen.decision, scen.curves, profile)
        if probs.any_clipped:
            return False
        checked = [probs.p_e_s, probs.p_b_s, probs.p_ne_ns]
        if profile.regime is Regime.INTERIOR:
            checked.append(probs.p_e_ns)
        if not all(_PROB_MARGIN <= p <= 1.0 - _PROB_MARGIN for p in checked):
            return False
        # The chance that any white hat finds the non-severe bug is itself a
        # probability. In the split-effort regime the race normalizes over
        # both white hat groups, so the mass is 1 by construction; in the
        # concentrated regime it is K_ns p_ns and must leave the vendor's
        # no-finder share positive (the simulator refuses it otherwise).
        mass_ne = scen.params.n * probs.p_e_ns + scen.params.l * probs.p_ne_ns
        if profile.regime is Regime.CORNER:
            return mass_ne <= 1.0 - _PROB_MARGIN
        return mass_ne <= 1.0 + 1e-12

    def draw_basic(self) -> SampledScenario:
        """Feasible draw with random bounties; both regimes occur."""

        def accept(scen: SampledScenario):
            if not condition1(scen.params, scen.curves, scen.decision.t).feasible:
                return None
            if not self._margins_ok(scen):
                return None
            return scen

        return self._accept_loop(accept)

    def draw_bbp(self) -> SampledScenario:
        """Feasible draw evaluated at its own optimal bounty pair."""

        def accept(scen: SampledScenario):
            t = scen.decision.t
            if not condition1(scen.params, scen.curves, t).feasible:
                return None
            bounties = optimal_bounties(scen.params, scen.curves, t)
            tuned = SampledScenario(
                scen.params,
                scen.curves,
                VendorDecision(t=t, p_s=bounties.p_s, p_ns=bounties.p_ns),
            )
            if select_regime(tuned.params, tuned.decision, tuned.curves) is not Regime.CORNER:
                return None
            if not self._margins_ok(tuned):
                return None
            return tuned

        return self._accept_loop(accept)

    def _no_bbp_margins_ok(self, params: MarketParams, curves: ReleaseCurves) -> bool:
        # The zero-bounty race probabilities and the slope brackets of the
        # no-program profit must stay sign-definite for every t; both are
        # extremal at t = 0 where K_s peaks.
        ks0 = curves.k_severe(0.0)
        big_n = params.n + params.m
        kappa = big_n - 1
        g0 = params.r_s / params.c_w - params.W / params.c_b
        lower = 1.0 - 2.0 * params.n * ks0 * g0 / (kappa * big_n)
        upper = 1.0 + 2.0 * params.m * ks0 * g0 / (kappa * big_n)
        return lower > _PROB_MARGIN and upper > _PROB_MARGIN

    def draw_release(self) -> SampledScenario:
        """Feasible draw whose release optimizers both have interior optima."""

        def accept(scen: SampledScenario):
            params, curves = scen.params, scen.curves
            if not self._no_bbp_margins_ok(params, curves):
                return None
            if not condition1(params, curves, scen.decision.t).feasible:
                return None
            # Cheap slope gate: an interior no-program optimum needs the
            # profit rising at t = 0 and falling at t_max.
            if _profit_nb_prime(params, curves, 0.0) <= 0.0:
                return None
            if _profit_nb_prime(params, curves, curves.t_max) >= 0.0:
                return None
            try:
                nb = optimal_release_no_bbp(params, curves)
                if nb.boundary:
                    return None
                span = 1e-3 * curves.t_max
                if not span < nb.t < curves.t_max - span:
                    return None
                if not condition1(params, curves, nb.t).feasible:
                    return None
                bbp = optimal_release_with_bbp(params, curves)
                if bbp.boundary:
                    return None
            except (NonConcaveObjectiveError, InfeasibleScenarioError, ConvergenceError):
                return None
            decision = VendorDecision(t=bbp.t, p_s=bbp.p_s, p_ns=bbp.p_ns)
            return SampledScenario(params, curves, decision)

        return self._accept_loop(accept)

    def draw_ratio(self) -> SampledScenario:
        """Feasible draw satisfying the ratio-contest existence conditions."""

        def accept(scen: SampledScenario):
            params = scen.params
            dec = scen.decision
            if not condition1(params, scen.curves, dec.t).feasible:
                return None
            if params.n == 1 and params.m == 1:
                return None
            prize_w = params.r_s + dec.p_s
            if prize_w < 0.1 or params.W < 0.1:
                return None
            if params.n == 1 and not (
                params.m * params.c_w * params.W > 1.01 * params.c_b * prize_w
            ):
                return None
            if params.m == 1 and not (
                params.n * params.c_b * prize_w > 1.01 * params.c_w * params.W
            ):
                return None
            return scen

        return self._accept_loop(accept)

    def draws(self, tier: str, count: int):
        """Yield ``count`` draws from the named tier."""
        method = {
            "raw": self.draw_raw,
            "basic": self.draw_basic,
            "bbp": self.draw_bbp,
            "release": self.draw_release,
            "ratio": self.draw_ratio,
        }.get(tier)
        if method is None:
            raise DomainError(f"unknown sampler tier {tier!r}")
        for _ in range(count):
            yield method()


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PropositionReport:
    """Outcome of one verifier over a population of draws."""

    id: str
    draws_tested: int
    excluded: int
    failures: tuple[dict, ...]
    passed: bool
    min_margin: float | None
    median_margin: float | None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "draws_tested": self.draws_tested,
            "excluded": self.excluded,
            "failures": list(self.failures),
            "passed": self.passed,
            "min_margin": self.min_margin,
            "median_margin": self.median_margin,
        }


def _make_report(
    report_id: str, margins: list[float], failures: list[dict], excluded: int = 0
) -> PropositionReport:
    return PropositionReport(
        id=report_id,
        draws_tested=len(margins),
        excluded=excluded,
        failures=tuple(failures),
        passed=not failures,
        min_margin=min(margins) if margins else None,
        median_margin=statistics.median(margins) if margins else None,
    )


def _require_draws(draws: int) -> None:
    if draws < 1:
        raise DomainError("draws must be at least 1")


# ---------------------------------------------------------------------------
# Verifiers
# ---------------------------------------------------------------------------


def verify_proposition_1(
    sampler: FeasibleSampler, draws: int, bounty_grid
) -> PropositionReport:
    """Severe-bounty monotonicity of the specialized-regime race.

    Along an increasing severe-bounty grid, expert effort and the expert
    win probability must not fall and the black hat win probability must
    not rise, strictly so wherever neither endpoint of a step is clamped.
    """
    _require_draws(draws)
    grid = [float(p) for p in bounty_grid]
    if len(grid) < 10:
        raise DomainError("bounty_grid needs at least 10 points")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("bounty_grid must be strictly increasing")

    margins: list[float] = []
    failures: list[dict] = []
    for _ in range(draws):
        scen = sampler.draw_basic()
        alphas: list[float] = []
        p_es: list[float] = []
        p_bs: list[float] = []
        clip_e: list[bool] = []
        clip_b: list[bool] = []
        for p_s in grid:
            dec = scen.decision.replace(p_s=p_s)
            profile = corner_equilibrium(scen.params, dec, scen.curves)
            probs = success_probabilities(scen.params, dec, scen.curves, profile)
            alphas.append(profile.alpha_s)
            p_es.append(probs.p_e_s)
            p_bs.append(probs.p_b_s)
            clip_e.append("p_e_s" in probs.clipped)
            clip_b.append("p_b_s" in probs.clipped)

        worst = math.inf
        problem = None
        for i in range(len(grid) - 1):
            d_alpha = alphas[i + 1] - alphas[i]
            if d_alpha <= 0.0:
                problem = f"alpha_s not strictly increasing at step {i}"
                break
            worst = min(worst, d_alpha)
            d_e = p_es[i + 1] - p_es[i]
            if not clip_e[i] and not clip_e[i + 1]:
                if d_e <= 0.0:
                    problem = f"p_e_s not strictly increasing at step {i}"
                    break
                worst = min(worst, d_e)
            elif d_e < -1e-15:
                problem = f"p_e_s decreases across a clamped step {i}"
                break
            d_b = p_bs[i] - p_bs[i + 1]
            if not clip_b[i] and not clip_b[i + 1]:
                if d_b <= 0.0:
                    problem = f"p_b_s not strictly decreasing at step {i}"
                    break
                worst = min(worst, d_b)
            elif d_b < -1e-15:
                problem = f"p_b_s increases across a clamped step {i}"
                break
        if problem is None:
            margins.append(worst)
        else:
            margins.append(0.0)
            failures.append({"detail": problem, "scenario": scen.to_dict()})
    return _make_report("proposition-1", margins, failures)


def verify_proposition_2(sampler: FeasibleSampler, draws: int) -> PropositionReport:
    """Profit ranking: a viable program beats no program at the same time.

    Draws come unfiltered; any draw whose optimal severe bounty is not
    positive, whose feasibility band fails, or whose zero-bounty
    probabilities clamp is excluded (and counted) rather than tested,
    since the claim is conditional on a viable program. Each tested draw
    must show a strictly positive profit gap and a decomposition residual
    within rounding.
    """
    _require_draws(draws)
    margins: list[float] = []
    failures: list[dict] = []
    excluded = 0
    while len(margins) + len(failures) < draws:
        scen = sampler.draw_raw()
        params, curves = scen.params, scen.curves
        t = scen.decision.t
        bounties = optimal_bounties(params, curves, t)
        band = condition1(params, curves, t)
        ks = k_severe(curves, t)
        big_n = params.n + params.m
        kappa = big_n - 1
        g0 = params.r_s / params.c_w - params.W / params.c_b
        p_e0 = (1.0 + params.m * ks * g0 / (kappa * big_n)) / big_n
        p_b0 = (1.0 - params.n * ks * g0 / (kappa * big_n)) / big_n
        unclipped = 0.0 <= p_e0 <= 1.0 and 0.0 <= p_b0 <= 1.0
        if not (bounties.bbp_viable and band.feasible and unclipped):
            excluded += 1
            continue
        gap = (
            concentrated_bbp_profit(params, curves, t)
            - profit_without_bbp(params, t, curves).total
        )
        residual = profit_decomposition_check(params, curves, t)
        if gap <= 0.0 or abs(residual) > 1e-9:
            failures.append(
                {
                    "detail": f"profit gap {gap!r}, decomposition residual {residual!r}",
                    "scenario": scen.to_dict(),
                }
            )
        else:
            margins.append(gap)
    return _make_report("proposition-2", margins, failures, excluded=excluded)


def verify_proposition_3(sampler: FeasibleSampler, draws: int) -> PropositionReport:
    """Release ordering: the program-running vendor releases earlier.

    On draws where both release optimizers find interior optima, the
    with-program time must come strictly before the no-program time and
    the profit-slope gap at the no-program optimum must be strictly
    negative. Boundary-optimum draws are segregated into ``excluded``
    because the ordering claim assumes interior optima.
    """
    _require_draws(draws)
    margins: list[float] = []
    failures: list[dict] = []
    boundary = 0
    for _ in range(draws):
        scen = sampler.draw_release()
        params, curves = scen.params, scen.curves
        nb = optimal_release_no_bbp(params, curves)
        bbp = optimal_release_with_bbp(params, curves)
        if nb.boundary or bbp.boundary:
            boundary += 1
            continue
        time_gap = nb.t - bbp.t
        slope_gap = release_gap_term(params, curves, nb.t)
        if time_gap <= 0.0 or slope_gap >= 0.0:
            failures.append(
                {
                    "detail": (
                        f"t_no_program={nb.t!r}, t_with_program={bbp.t!r}, "
                        f"slope gap at t_no_program={slope_gap!r}"
                    ),
                    "scenario": scen.to_dict(),
                }
            )
        else:
            margins.append(time_gap)
    return _make_report("proposition-3", margins, failures, excluded=boundary)


def figure1_sweep(
    params: MarketParams, curves, t: float, bounty_grid
) -> list[dict]:
    """Severe-race win probabilities as the severe bounty sweeps a grid.

    Returns one row per grid point with the per-hacker expert and black
    hat probabilities from the specialized-regime forms. The two curves
    are affine in the bounty until a clamp binds and cross where the
    cost-adjusted prize values coincide, at p_s = c_w W / c_b - r_s.
    """
    rows: list[dict] = []
    for p_s in bounty_grid:
        dec = VendorDecision(t=t, p_s=float(p_s), p_ns=0.0)
        profile = corner_equilibrium(params, dec, curves)
        probs = success_probabilities(params, dec, curves, profile)
        rows.append({"p_s": float(p_s), "p_e_s": probs.p_e_s, "p_b_s": probs.p_b_s})
    return rows


def _slack(tolerance: float, error: float) -> float:
    return (tolerance - error) / tolerance


def identity_suite(
    sampler: FeasibleSampler,
    draws: int,
    normalization_tol: float = 1e-12,
) -> PropositionReport:
    """Batch check of the algebraic identities the closed forms satisfy.

    Per draw: the severe race normalizes (n p_e_s + m p_b_s = 1); the
    term-by-term and polynomial profit forms agree (specialized regime);
    the optimal-bounty profit decomposition residual vanishes; the two
    equilibrium families agree on every effort except the non-expert's at
    the regime boundary; and the zero-bounty probability forms are the
    p_s = 0 specialization of the general ones. Margins are reported as
    normalized slack (1 = exact, 0 = at tolerance).
    """
    _require_draws(draws)
    margins: list[float] = []
    failures: list[dict] = []
    for _ in range(draws):
        scen = sampler.draw_basic()
        params, curves, dec = scen.params, scen.curves, scen.decision
        n, l, m = params.n, params.l, params.m
        problems: list[str] = []
        slacks: list[float] = []

        profile = equilibrium(params, dec, curves)
        probs = success_probabilities(params, dec, curves, profile)
        norm_err = abs(n * probs.p_e_s + m * probs.p_b_s - 1.0)
        slacks.append(_slack(normalization_tol, norm_err))
        if norm_err > normalization_tol:
            problems.append(f"severe race normalization off by {norm_err!r}")

        if profile.regime is Regime.CORNER:
            ks = k_severe(curves, dec.t)
            kns = k_nonsevere(curves, dec.t)
            mass_ne = l * probs.p_ne_ns
            pi_terms = (
                curves.revenue(dec.t)
                - ks * m * probs.p_b_s * params.TC_s
                - ks * n * probs.p_e_s * dec.p_s
                - kns * mass_ne * dec.p_ns
                - kns * params.TC_ns * (1.0 - mass_ne)
            )
            pi_poly = profit_with_bbp(params, dec, curves).total
            rel = abs(pi_terms - pi_poly) / max(1.0, abs(pi_terms), abs(pi_poly))
            slacks.append(_slack(1e-12, rel))
            if rel > 1e-12:
                problems.append(f"profit forms disagree, relative gap {rel!r}")

        residual = abs(profit_decomposition_check(params, curves, dec.t))
        slacks.append(_slack(1e-9, residual))
        if residual > 1e-9:
            problems.append(f"decomposition residual {residual!r}")

        ks = k_severe(curves, dec.t)
        kns = k_nonsevere(curves, dec.t)
        p_ns_boundary = (
            ks * (params.r_s + dec.p_s) * (n + l) / ((n + m) * params.c_w * kns)
        )
        dec_b = dec.replace(p_ns=p_ns_boundary)
        corner_b = corner_equilibrium(params, dec_b, curves)
        interior_b = interior_equilibrium(params, dec_b, curves)
        continuity_err = max(
            abs(corner_b.alpha_s - interior_b.alpha_s),
            abs(corner_b.alpha_ns - interior_b.alpha_ns),
            abs(corner_b.mu_s - interior_b.mu_s),
        )
        slacks.append(_slack(1e-9, continuity_err))
        if continuity_err > 1e-9:
            problems.append(f"regime-boundary effort gap {continuity_err!r}")

        dec0 = dec.replace(p_s=0.0)
        probs0 = success_probabilities(
            params, dec0, curves, corner_equilibrium(params, dec0, curves)
        )
        big_n = n + m
        kappa = big_n - 1
        g0 = params.r_s / params.c_w - params.W / params.c_b
        p_e0 = min(1.0, max(0.0, (1.0 + m * ks * g0 / (kappa * big_n)) / big_n))
        p_b0 = min(1.0, max(0.0, (1.0 - n * ks * g0 / (kappa * big_n)) / big_n))
        zero_err = max(abs(probs0.p_e_s - p_e0), abs(probs0.p_b_s - p_b0))
        slacks.append(_slack(1e-15, zero_err))
        if zero_err > 1e-15:
            problems.append(f"zero-bounty specialization gap {zero_err!r}")

        margins.append(min(slacks))
        if problems:
            failures.append({"detail": "; ".join(problems), "scenario": scen.to_dict()})
    return _make_report("identity-suite", margins, failures)


def _condition1_band(sampler: FeasibleSampler, draws: int) -> PropositionReport:
    """The feasibility band is never empty, on arbitrary validated draws."""
    margins: list[float] = []
    failures: list[dict] = []
    for _ in range(draws):
        scen = sampler.draw_raw()
        band = condition1(scen.params, scen.curves, scen.decision.t)
        width = band.ub - band.lb
        if width <= 0.0:
            failures.append(
                {"detail": f"band width {width!r}", "scenario": scen.to_dict()}
            )
        else:
            margins.append(width)
    return _make_report("condition-1-band", margins, failures)


def run_full_suite(
    seed: int,
    draws: int = 1000,
    normalization_tol: float = 1e-12,
    bounty_grid=None,
) -> dict:
    """Run every verifier and return a JSON-ready summary.

    Each verifier gets its own sampler derived from ``seed`` so reports
    are independent of each other's rejection behavior. The summary's
    ``passed`` is the conjunction of all report outcomes.
    """
    _require_draws(draws)
    if bounty_grid is None:
        bounty_grid = [20.0 * i / 49 for i in range(50)]
    reports = [
        verify_proposition_1(FeasibleSampler(seed), draws, bounty_grid),
        verify_proposition_2(FeasibleSampler(seed + 1), draws),
        verify_proposition_3(FeasibleSampler(seed + 2), draws),
        identity_suite(FeasibleSampler(seed + 3), draws, normalization_tol),
        _condition1_band(FeasibleSampler(seed + 4), draws),
    ]
    return {
        "seed": seed,
        "draws": draws,
        "reports": {report.id: report.to_dict() for report in reports},
        "passed": all(report.passed for report in reports),
    }
