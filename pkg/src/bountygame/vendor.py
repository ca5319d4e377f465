"""Vendor stage: bounty setting, release timing, and program viability.

The vendor moves first. It picks a release time t and a bounty pair
(p_s, p_ns), anticipating the specialized-regime hacker equilibrium, and
weighs bounty payouts against the costs of exploited or user-discovered
bugs. Everything here is built on the specialized (corner) closed forms:
that is the regime the bounty program is designed to induce, and the
optimal-bounty and release-time formulas are derived inside it.

Profit appears twice on purpose. ``profit_with_bbp`` assembles the
expected-cost form term by term from success probabilities, while an
expanded polynomial form of the same expression is evaluated separately;
the two must agree to relative 1e-12, which guards the algebra whenever a
profit is computed.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from ._rootfind import golden_section_max, newton_bisect
from .errors import (
    DomainError,
    FeasibilityWarning,
    InfeasibleScenarioError,
    NonConcaveObjectiveError,
)
from .hackers import Regime, select_regime
from .scenario import (
    CurveSet,
    MarketParams,
    VendorDecision,
    k_nonsevere,
    k_severe,
    revenue,
)

__all__ = [
    "ProfitBreakdown",
    "Condition1Bounds",
    "OptimalBounties",
    "ReleaseOptimum",
    "BbpRelease",
    "WhhCountReport",
    "optimal_bounties",
    "condition1",
    "profit_with_bbp",
    "profit_without_bbp",
    "concentrated_bbp_profit",
    "optimal_release_no_bbp",
    "optimal_release_with_bbp",
    "release_gap_term",
    "profit_decomposition_check",
    "optimal_whh_count",
]

_FOC_TOL = 1e-9
_FOC_SCAN_POINTS = 201
_FEASIBILITY_SCAN_POINTS = 512


# ---------------------------------------------------------------------------
# Result types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProfitBreakdown:
    """Vendor profit split into revenue and expected cost components.

    ``total`` is revenue minus the sum of the five cost fields. The
    uncoordinated-disclosure cost only arises without a bounty program
    (a white hat finds the severe bug and discloses it in the open);
    the two bounty costs only arise with one.
    """

    revenue: float
    bhh_exploit_cost: float
    severe_bounty_cost: float
    nonsevere_bounty_cost: float
    user_discovery_cost: float
    uncoordinated_disclosure_cost: float
    total: float

    def to_dict(self) -> dict:
        return {
            "revenue": self.revenue,
            "bhh_exploit_cost": self.bhh_exploit_cost,
            "severe_bounty_cost": self.severe_bounty_cost,
            "nonsevere_bounty_cost": self.nonsevere_bounty_cost,
            "user_discovery_cost": self.user_discovery_cost,
            "uncoordinated_disclosure_cost": self.uncoordinated_disclosure_cost,
            "total": self.total,
        }


@dataclass(frozen=True)
class Condition1Bounds:
    """Feasibility band for a viable bounty program at a given release time.

    The program is viable when the cost-adjusted prize gap
    gap_value = W/c_b - r_s/c_w sits strictly between ``lb`` and ``ub``;
    that is equivalent to a positive optimal severe bounty together with
    both severe-race probabilities staying off their clamps.
    """

    lb: float
    ub: float
    gap_value: float
    feasible: bool

    def to_dict(self) -> dict:
        return {
            "lb": self.lb,
            "ub": self.ub,
            "gap_value": self.gap_value,
            "feasible": self.feasible,
        }


@dataclass(frozen=True)
class OptimalBounties:
    """Profit-maximizing bounty pair at a fixed release time.

    A non-positive p_s is reported as computed, with ``bbp_viable`` False:
    it means no bounty program is worth running at this release time, and
    the vendor comparison should fall back to the no-program profit.
    """

    p_s: float
    p_ns: float
    bbp_viable: bool

    def to_dict(self) -> dict:
        return {"p_s": self.p_s, "p_ns": self.p_ns, "bbp_viable": self.bbp_viable}


@dataclass(frozen=True)
class ReleaseOptimum:
    """Optimal release time without a bounty program."""

    t: float
    boundary: bool
    foc_value: float
    profit: float

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "boundary": self.boundary,
            "foc_value": self.foc_value,
            "profit": self.profit,
        }


@dataclass(frozen=True)
class BbpRelease:
    """Optimal release time and bounties with a bounty program."""

    t: float
    p_s: float
    p_ns: float
    profit: float
    boundary: bool

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "p_s": self.p_s,
            "p_ns": self.p_ns,
            "profit": self.profit,
            "boundary": self.boundary,
        }


@dataclass(frozen=True)
class WhhCountReport:
    """Three competing answers for the profit-maximizing expert head count.

    The published closed form and the positive root of the published
    first-order quadratic do not agree with each other; both are reported
    verbatim, together with an integer brute-force maximizer, and the
    ``note`` field states the discrepancy. No adjudication is hard-coded.
    """

    n_closed_form: float
    n_quadratic: float
    n_brute_force: int
    note: str

    def to_dict(self) -> dict:
        return {
            "n_closed_form": self.n_closed_form,
            "n_quadratic": self.n_quadratic,
            "n_brute_force": self.n_brute_force,
            "note": self.note,
        }


# ---------------------------------------------------------------------------
# Bounties and feasibility
# ---------------------------------------------------------------------------


def _check_vendor_market(params: MarketParams) -> None:
    if params.n < 1 or params.l < 1 or params.m < 1:
        raise DomainError("vendor stage needs at least one hacker of each type")
    if params.c_w <= 1.0:
        raise DomainError("expert cost parameter c_w must exceed 1")
    if params.c_b <= 0.0:
        raise DomainError("black hat cost parameter c_b must be positive")


def _positive_k_severe(curves: CurveSet, t: float) -> float:
    ks = k_severe(curves, t)
    if ks <= 0.0:
        raise DomainError(f"K_s(t) must be positive, got {ks!r} at t={t!r}")
    return ks


def optimal_bounties(params: MarketParams, curves: CurveSet, t: float) -> OptimalBounties:
    """Closed-form profit-maximizing bounties at release time t.

    The severe bounty is half the exploit cost the vendor avoids plus the
    cost-ratio-adjusted black hat prize net of the experts' free reward,
    minus a competition correction that grows as the severe bug gets less
    likely. The non-severe bounty is half the user-discovery cost.
    """
    _check_vendor_market(params)
    ks = _positive_k_severe(curves, t)
    n, m = params.n, params.m
    big_n = n + m
    kappa = big_n - 1
    p_s = 0.5 * (params.TC_s + (params.c_w / params.c_b) * params.W - params.r_s) - 0.5 * (
        big_n * kappa * params.c_w
    ) / (m * ks)
    p_ns = 0.5 * params.TC_ns
    return OptimalBounties(p_s=p_s, p_ns=p_ns, bbp_viable=p_s > 0.0)


def condition1(params: MarketParams, curves: CurveSet, t: float) -> Condition1Bounds:
    """Feasibility band for running a bounty program at release time t."""
    _check_vendor_market(params)
    ks = _positive_k_severe(curves, t)
    n, m = params.n, params.m
    big_n = n + m
    kappa = big_n - 1
    base = big_n * kappa / (m * ks)
    tc_ratio = params.TC_s / params.c_w
    lb = max(base - tc_ratio, tc_ratio - (2 * m + n) * big_n * kappa / (m * n * ks))
    ub = base + tc_ratio
    gap = params.W / params.c_b - params.r_s / params.c_w
    return Condition1Bounds(lb=lb, ub=ub, gap_value=gap, feasible=lb < gap < ub)


# ---------------------------------------------------------------------------
# Profit evaluation
# ---------------------------------------------------------------------------


def _severe_probs_formula(
    params: MarketParams, ks: float, p_s: float
) -> tuple[float, float]:
    """Specialized-regime severe-race probabilities, no clamping."""
    n, m = params.n, params.m
    big_n = n + m
    kappa = big_n - 1
    g = (params.r_s + p_s) / params.c_w - params.W / params.c_b
    p_e = (1.0 + m * ks * g / (kappa * big_n)) / big_n
    p_b = (1.0 - n * ks * g / (kappa * big_n)) / big_n
    return p_e, p_b


def _profit_polynomial(
    params: MarketParams, curves: CurveSet, t: float, p_s: float, p_ns: float
) -> float:
    """Expanded polynomial form of the with-program profit.

    Same quantity as the term-by-term expected-cost form, distributed out,
    so the two evaluations take different floating-point routes and can
    cross-check each other.
    """
    ks = k_severe(curves, t)
    kns = k_nonsevere(curves, t)
    n, m = params.n, params.m
    big_n = n + m
    kappa = big_n - 1
    g = (params.r_s + p_s) / params.c_w - params.W / params.c_b
    shared = m * n * ks * ks * g / (kappa * big_n * big_n)
    return (
        revenue(curves, t)
        - m * ks * params.TC_s / big_n
        + shared * params.TC_s
        - n * ks * p_s / big_n
        - shared * p_s
        - (kns * p_ns) ** 2
        - kns * params.TC_ns
        + kns * kns * params.TC_ns * p_ns
    )


def _with_bbp_breakdown(
    params: MarketParams, curves: CurveSet, t: float, p_s: float, p_ns: float
) -> ProfitBreakdown:
    ks = k_severe(curves, t)
    kns = k_nonsevere(curves, t)
    p_e, p_b = _severe_probs_formula(params, ks, p_s)
    rev = revenue(curves, t)
    bhh_cost = ks * params.m * p_b * params.TC_s
    bounty_s = ks * params.n * p_e * p_s
    bounty_ns = (kns * p_ns) ** 2
    user_cost = kns * params.TC_ns * (1.0 - kns * p_ns)
    total = rev - bhh_cost - bounty_s - bounty_ns - user_cost
    check = _profit_polynomial(params, curves, t, p_s, p_ns)
    if abs(total - check) > 1e-12 * max(1.0, abs(total), abs(check)):
        raise AssertionError(
            f"profit forms disagree: {total!r} vs {check!r} at t={t!r}, "
            f"p_s={p_s!r}, p_ns={p_ns!r}"
        )
    return ProfitBreakdown(
        revenue=rev,
        bhh_exploit_cost=bhh_cost,
        severe_bounty_cost=bounty_s,
        nonsevere_bounty_cost=bounty_ns,
        user_discovery_cost=user_cost,
        uncoordinated_disclosure_cost=0.0,
        total=total,
    )


def profit_with_bbp(
    params: MarketParams, decision: VendorDecision, curves: CurveSet
) -> ProfitBreakdown:
    """Expected vendor profit running a bounty program at this decision.

    Built from the specialized-regime probability formulas. If the
    decision actually induces the split-effort regime, or a probability
    runs off its clamp, the formulas are evaluated anyway and a
    ``FeasibilityWarning`` is emitted: the breakdown then describes the
    program the vendor planned for, not the equilibrium it would get.
    """
    _check_vendor_market(params)
    t, p_s, p_ns = decision.t, decision.p_s, decision.p_ns
    ks = _positive_k_severe(curves, t)
    kns = k_nonsevere(curves, t)
    if select_regime(params, decision, curves) is not Regime.CORNER:
        warnings.warn(
            "decision induces the split-effort regime; specialized-regime "
            "profit formulas evaluated anyway",
            FeasibilityWarning,
            stacklevel=2,
        )
    p_e, p_b = _severe_probs_formula(params, ks, p_s)
    if not (0.0 <= p_e <= 1.0 and 0.0 <= p_b <= 1.0 and 0.0 <= kns * p_ns <= 1.0):
        warnings.warn(
            "success probabilities leave [0, 1] at this decision; profit "
            "formulas evaluated without clamping",
            FeasibilityWarning,
            stacklevel=2,
        )
    return _with_bbp_breakdown(params, curves, t, p_s, p_ns)


def profit_without_bbp(
    params: MarketParams, t: float, curves: CurveSet
) -> ProfitBreakdown:
    """Expected vendor profit with no bounty program at release time t.

    Severe-race probabilities are the zero-bounty specializations, clamped
    into [0, 1]. A white hat who wins the severe race discloses in the
    open, costing the vendor a fraction x of the exploit cost; every
    existing non-severe bug costs the full user-discovery amount.
    """
    _check_vendor_market(params)
    ks = _positive_k_severe(curves, t)
    kns = k_nonsevere(curves, t)
    p_e0, p_b0 = _severe_probs_formula(params, ks, 0.0)
    p_e0 = min(1.0, max(0.0, p_e0))
    p_b0 = min(1.0, max(0.0, p_b0))
    rev = revenue(curves, t)
    bhh_cost = ks * params.m * p_b0 * params.TC_s
    disclosure = ks * params.n * p_e0 * params.x * params.TC_s
    user_cost = kns * params.TC_ns
    return ProfitBreakdown(
        revenue=rev,
        bhh_exploit_cost=bhh_cost,
        severe_bounty_cost=0.0,
        nonsevere_bounty_cost=0.0,
        user_discovery_cost=user_cost,
        uncoordinated_disclosure_cost=disclosure,
        total=rev - bhh_cost - disclosure - user_cost,
    )


def _profit_nb_unclamped(params: MarketParams, curves: CurveSet, t: float) -> float:
    """No-program profit with the probability formulas left unclamped.

    Used only by identity checks, where the algebra is exact as formulas
    but breaks once a clamp binds.
    """
    ks = k_severe(curves, t)
    kns = k_nonsevere(curves, t)
    p_e0, p_b0 = _severe_probs_formula(params, ks, 0.0)
    return (
        revenue(curves, t)
        - ks * params.m * p_b0 * params.TC_s
        - ks * params.n * p_e0 * params.x * params.TC_s
        - kns * params.TC_ns
    )


def concentrated_bbp_profit(params: MarketParams, curves: CurveSet, t: float) -> float:
    """With-program profit at release time t with bounties re-optimized.

    This is the one-dimensional objective the release-time search climbs:
    the bounty pair is substituted with its closed forms at each t, so the
    value is meaningful wherever the feasibility band holds.
    """
    bounties = optimal_bounties(params, curves, t)
    return _profit_polynomial(params, curves, t, bounties.p_s, bounties.p_ns)


# ---------------------------------------------------------------------------
# Release timing
# ---------------------------------------------------------------------------


def _profit_nb_prime(params: MarketParams, curves: CurveSet, t: float) -> float:
    """Analytic time derivative of the no-program profit."""
    ks = k_severe(curves, t)
    ks_prime = curves.k_severe_prime(t)
    kns_prime = curves.k_nonsevere_prime(t)
    n, m = params.n, params.m
    big_n = n + m
    kappa = big_n - 1
    g0 = params.r_s / params.c_w - params.W / params.c_b
    return (
        curves.revenue_prime(t)
        - ks_prime * (m / big_n) * (1.0 - 2.0 * n * ks * g0 / (kappa * big_n)) * params.TC_s
        - ks_prime
        * (n / big_n)
        * (1.0 + 2.0 * m * ks * g0 / (kappa * big_n))
        * params.x
        * params.TC_s
        - kns_prime * params.TC_ns
    )


def _concentrated_prime(params: MarketParams, curves: CurveSet, t: float) -> float:
    """Analytic time derivative of the concentrated with-program profit.

    By the envelope theorem the bounty re-optimization contributes nothing,
    so this is the partial time derivative of the profit at the optimal
    bounty pair.
    """
    ks = k_severe(curves, t)
    kns = k_nonsevere(curves, t)
    ks_prime = curves.k_severe_prime(t)
    kns_prime = curves.k_nonsevere_prime(t)
    n, m = params.n, params.m
    big_n = n + m
    kappa = big_n - 1
    bounties = optimal_bounties(params, curves, t)
    g_star = (params.r_s + bounties.p_s) / params.c_w - params.W / params.c_b
    severe_terms = (m * params.TC_s / big_n) * (
        1.0 - 2.0 * n * ks * g_star / (kappa * big_n)
    ) + (n * bounties.p_s / big_n) * (1.0 + 2.0 * m * ks * g_star / (kappa * big_n))
    return (
        curves.revenue_prime(t)
        - ks_prime * severe_terms
        - kns_prime * params.TC_ns
        + 2.0 * kns * kns_prime * bounties.p_ns * bounties.p_ns
    )


def _scan_foc_brackets(
    foc, t_max: float, points: int
) -> tuple[list[tuple[float, float]], list[float]]:
    """Sign-change brackets of a first-order condition on [0, t_max]."""
    ts = [t_max * i / (points - 1) for i in range(points)]
    vals = [foc(t) for t in ts]
    brackets: list[tuple[float, float]] = []
    for i in range(points - 1):
        a, b = vals[i], vals[i + 1]
        if a == 0.0:
            brackets.append((ts[i], ts[i]))
        elif a * b < 0.0:
            brackets.append((ts[i], ts[i + 1]))
    if vals[-1] == 0.0:
        brackets.append((t_max, t_max))
    return brackets, vals


def _refine_root(foc, lo: float, hi: float) -> float:
    if lo == hi:
        return lo
    return newton_bisect(foc, lo, hi, ftol=_FOC_TOL)


def optimal_release_no_bbp(params: MarketParams, curves: CurveSet) -> ReleaseOptimum:
    """Profit-maximizing release time with no bounty program.

    Scans the analytic first-order condition for sign changes on
    [0, t_max]. Exactly one falling sign change is the expected concave
    shape and is refined to the root; no sign change means a boundary
    optimum (the better endpoint is returned, flagged); multiple sign
    changes mean the objective is not concave, which is reported as an
    error carrying every root found rather than silently picking one.
    """
    _check_vendor_market(params)

    def foc(t: float) -> float:
        return _profit_nb_prime(params, curves, t)

    brackets, _ = _scan_foc_brackets(foc, curves.t_max, _FOC_SCAN_POINTS)
    if len(brackets) > 1:
        roots = tuple(_refine_root(foc, lo, hi) for lo, hi in brackets)
        raise NonConcaveObjectiveError(
            "no-program profit has multiple stationary times", roots=roots
        )
    if len(brackets) == 1:
        lo, hi = brackets[0]
        if foc(lo) > 0.0 or lo == hi:
            t_star = _refine_root(foc, lo, hi)
            return ReleaseOptimum(
                t=t_star,
                boundary=False,
                foc_value=foc(t_star),
                profit=profit_without_bbp(params, t_star, curves).total,
            )
        # Rising sign change: an interior minimum, so the maximum sits on
        # a boundary after all.
    p0 = profit_without_bbp(params, 0.0, curves).total
    p1 = profit_without_bbp(params, curves.t_max, curves).total
    t_star = 0.0 if p0 >= p1 else curves.t_max
    return ReleaseOptimum(
        t=t_star,
        boundary=True,
        foc_value=foc(t_star),
        profit=max(p0, p1),
    )


def _feasible_interval(
    params: MarketParams, curves: CurveSet
) -> tuple[float, float] | None:
    """The sub-interval of [0, t_max] where the feasibility band holds.

    The band's bounds move monotonically with K_s(t), so the feasible set
    is an interval; a dense scan finds it and bisection sharpens the
    edges.
    """

    def ok(t: float) -> bool:
        return condition1(params, curves, t).feasible

    points = _FEASIBILITY_SCAN_POINTS
    ts = [curves.t_max * i / (points - 1) for i in range(points)]
    flags = [ok(t) for t in ts]
    if not any(flags):
        return None
    first = flags.index(True)
    last = points - 1 - flags[::-1].index(True)

    lo = ts[first]
    if first > 0:
        bad, good = ts[first - 1], ts[first]
        for _ in range(60):
            mid = 0.5 * (bad + good)
            if ok(mid):
                good = mid
            else:
                bad = mid
        lo = good
    hi = ts[last]
    if last < points - 1:
        good, bad = ts[last], ts[last + 1]
        for _ in range(60):
            mid = 0.5 * (good + bad)
            if ok(mid):
                good = mid
            else:
                bad = mid
        hi = good
    return lo, hi


def _describe_infeasibility(params: MarketParams, curves: CurveSet) -> str:
    probes = [curves.t_max * i / 8.0 for i in range(9)]
    below = all(
        condition1(params, curves, t).gap_value <= condition1(params, curves, t).lb
        for t in probes
    )
    above = all(
        condition1(params, curves, t).gap_value >= condition1(params, curves, t).ub
        for t in probes
    )
    sample = condition1(params, curves, probes[4])
    detail = (
        f"at t={probes[4]:g}: lb={sample.lb:.6g}, gap={sample.gap_value:.6g}, "
        f"ub={sample.ub:.6g}"
    )
    if below:
        return f"prize gap never exceeds the lower feasibility bound ({detail})"
    if above:
        return f"prize gap never falls below the upper feasibility bound ({detail})"
    return f"prize gap leaves the feasibility band everywhere on [0, t_max] ({detail})"


def optimal_release_with_bbp(params: MarketParams, curves: CurveSet) -> BbpRelease:
    """Jointly optimal release time and bounties with a bounty program.

    Maximizes the concentrated objective over the feasible sub-interval by
    golden-section search, then polishes with the analytic first-order
    condition when the optimum is interior. Raises
    ``InfeasibleScenarioError`` naming the violated feasibility bound when
    no release time supports a program.
    """
    _check_vendor_market(params)
    interval = _feasible_interval(params, curves)
    if interval is None:
        raise InfeasibleScenarioError(_describe_infeasibility(params, curves))
    lo, hi = interval

    def phi(t: float) -> float:
        return concentrated_bbp_profit(params, curves, t)

    def foc(t: float) -> float:
        return _concentrated_prime(params, curves, t)

    t0 = golden_section_max(phi, lo, hi, xtol=1e-10 * max(curves.t_max, 1.0))
    width = hi - lo
    boundary = t0 - lo < 1e-7 * width or hi - t0 < 1e-7 * width
    t_star = t0
    if not boundary:
        # Bracket the stationary point around the golden-section estimate.
        delta = 1e-3 * width
        b_lo, b_hi = max(lo, t0 - delta), min(hi, t0 + delta)
        for _ in range(12):
            if foc(b_lo) * foc(b_hi) < 0.0:
                break
            delta *= 2.0
            b_lo, b_hi = max(lo, t0 - delta), min(hi, t0 + delta)
        if foc(b_lo) * foc(b_hi) < 0.0:
            t_star = newton_bisect(foc, b_lo, b_hi, ftol=_FOC_TOL)
    bounties = optimal_bounties(params, curves, t_star)
    return BbpRelease(
        t=t_star,
        p_s=bounties.p_s,
        p_ns=bounties.p_ns,
        profit=phi(t_star),
        boundary=boundary,
    )


def release_gap_term(params: MarketParams, curves: CurveSet, t: float) -> float:
    """Derivative gap D(t) between the two concentrated profit slopes.

    D(t) is the time derivative of the with-program profit (bounties
    re-optimized at each t) minus that of the no-program profit. Both
    program-specific pieces scale with the severity decay, so D carries
    the sign of how much earlier a program-running vendor wants to
    release; it is meaningful where the feasibility band holds.
    """
    _check_vendor_market(params)
    ks = _positive_k_severe(curves, t)
    kns = k_nonsevere(curves, t)
    ks_prime = curves.k_severe_prime(t)
    kns_prime = curves.k_nonsevere_prime(t)
    n, m = params.n, params.m
    big_n = n + m
    kappa = big_n - 1
    bounties = optimal_bounties(params, curves, t)
    p_s, p_ns = bounties.p_s, bounties.p_ns
    g0 = params.r_s / params.c_w - params.W / params.c_b
    bracket = (
        n * p_s / big_n
        + 2.0 * m * n * ks * p_s * p_s / (params.c_w * kappa * big_n * big_n)
        + (n * params.x * params.TC_s / big_n)
        * (1.0 + 2.0 * m * ks * g0 / (kappa * big_n))
    )
    return ks_prime * bracket + 2.0 * kns * kns_prime * p_ns * p_ns


def profit_decomposition_check(params: MarketParams, curves: CurveSet, t: float) -> float:
    """Residual of the with-program profit decomposition at optimal bounties.

    At the optimal bounty pair the with-program profit equals the
    no-program profit plus three non-negative increments: the severe
    bounty's competitive gain, the non-severe bounty's gain, and the
    avoided uncoordinated-disclosure cost. Probabilities are treated as
    formulas (no clamping), since the identity is algebraic. Returns
    left side minus right side; anything beyond rounding noise means the
    algebra has been broken.
    """
    _check_vendor_market(params)
    ks = _positive_k_severe(curves, t)
    kns = k_nonsevere(curves, t)
    n, m = params.n, params.m
    big_n = n + m
    kappa = big_n - 1
    bounties = optimal_bounties(params, curves, t)
    p_s, p_ns = bounties.p_s, bounties.p_ns
    lhs = _profit_polynomial(params, curves, t, p_s, p_ns)
    p_e0, _ = _severe_probs_formula(params, ks, 0.0)
    rhs = (
        _profit_nb_unclamped(params, curves, t)
        + m * n * ks * ks * p_s * p_s / (kappa * big_n * big_n * params.c_w)
        + (kns * p_ns) ** 2
        + n * ks * params.x * params.TC_s * p_e0
    )
    return lhs - rhs


# ---------------------------------------------------------------------------
# Expert head count
# ---------------------------------------------------------------------------

_WHH_NOTE = (
    "the published closed form for the optimal expert count is not a root of "
    "the published first-order quadratic (whose positive root is (m+1)/2); "
    "both are reported verbatim and the brute-force integer maximizer is the "
    "adjudicating evidence"
)


def optimal_whh_count(params: MarketParams, curves: CurveSet, t: float) -> WhhCountReport:
    """Three answers for how many experts maximize with-program profit.

    ``n_closed_form`` and ``n_quadratic`` are the two published continuous
    candidates, which disagree; ``n_brute_force`` maximizes actual profit
    over integer head counts from 1 to 4m at the given release time, with
    bounties re-optimized per head count and the no-program profit used
    where the feasibility band fails. Ties go to the smallest count.
    """
    _check_vendor_market(params)
    m = params.m
    disc = 9 * m * m - 10 * m + 1
    if disc < 0:
        raise DomainError("head-count discriminant is negative, no real closed form")
    n_closed = math.sqrt(float(disc)) / 4.0 - (m - 1) / 4.0
    quad_disc = (m - 1) * (m - 1) + 8.0 * m * (m + 1)
    n_quad = (-(m - 1) + math.sqrt(quad_disc)) / 4.0

    best_n = 1
    best_value = -math.inf
    for candidate in range(1, 4 * m + 1):
        trial = params.replace(n=candidate)
        if condition1(trial, curves, t).feasible:
            value = concentrated_bbp_profit(trial, curves, t)
        else:
            value = profit_without_bbp(trial, t, curves).total
        if value > best_value:
            best_value = value
            best_n = candidate
    return WhhCountReport(
        n_closed_form=n_closed,
        n_quadratic=n_quad,
        n_brute_force=best_n,
        note=_WHH_NOTE,
    )
