"""Domain types, parameter validation, and time-dependent release curves.

The market is populated by three hacker types: n expert white hats, l
non-expert white hats, and m black hats. The vendor picks a release time t
and a pair of bounties (p_s, p_ns). Everything downstream consumes the
residual-bug likelihood curves K_s(t), K_ns(t) and the revenue curve R(t)
through the interfaces defined here.

All types are immutable value objects. Construction only checks structure
(finite numbers, integral counts); the economic assumptions are enforced by
``validate``, which returns a report instead of raising so that callers can
inspect every violated condition at once.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, fields
from enum import Enum

import numpy as np

from .errors import DomainError

__all__ = [
    "SeverityClass",
    "MarketParams",
    "CurveSet",
    "ReleaseCurves",
    "VendorDecision",
    "ValidationReport",
    "validate",
    "k_severe",
    "k_nonsevere",
    "revenue",
]

# Number of sample points for the numeric curve-shape check.
SHAPE_GRID_POINTS = 160


class SeverityClass(Enum):
    """Two-level vulnerability severity classification."""

    SEVERE = "severe"
    NON_SEVERE = "non_severe"


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def _require_count(name: str, value) -> int:
    if isinstance(value, bool) or float(value) != int(value):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class MarketParams:
    """Market primitives: hacker counts, effort costs, rewards, and losses.

    n, l, m
        Counts of expert white hats, non-expert white hats, and black hats.
    c_w, c_b
        Severity-adjusted effort cost multipliers (both must exceed 1 for
        the closed forms to be well defined).
    r_s
        Reputational gain to an expert white hat for the first severe find.
    W
        Black-hat illicit gain from the first severe exploit.
    TC_s
        Vendor loss when a black hat finds a severe bug first.
    TC_ns
        Vendor loss when a user finds a non-severe bug.
    x
        Fraction of TC_s incurred on uncoordinated disclosure, in (0, 1).
    """

    n: int
    l: int
    m: int
    c_w: float
    c_b: float
    r_s: float
    W: float
    TC_s: float
    TC_ns: float
    x: float

    def __post_init__(self):
        for name in ("n", "l", "m"):
            object.__setattr__(self, name, _require_count(name, getattr(self, name)))
        for name in ("c_w", "c_b", "r_s", "W", "TC_s", "TC_ns", "x"):
            object.__setattr__(self, name, _require_finite(name, getattr(self, name)))

    def replace(self, **changes) -> "MarketParams":
        """Return a copy with the given fields replaced."""
        kwargs = {f.name: getattr(self, f.name) for f in fields(self)}
        kwargs.update(changes)
        return MarketParams(**kwargs)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


class CurveSet(ABC):
    """Interface for the release curves K_s(t), K_ns(t), R(t).

    Implementations must provide values and first derivatives on
    [0, t_max]. Second derivatives have finite-difference defaults; override
    them when analytic forms are available. Any implementation has to pass
    the numeric shape check in ``validate``: decreasing likelihoods with
    slowing decay, decreasing concave revenue, positive revenue at t_max.
    """

    t_max: float

    @abstractmethod
    def k_severe(self, t: float) -> float: ...

    @abstractmethod
    def k_nonsevere(self, t: float) -> float: ...

    @abstractmethod
    def revenue(self, t: float) -> float: ...

    @abstractmethod
    def k_severe_prime(self, t: float) -> float: ...

    @abstractmethod
    def k_nonsevere_prime(self, t: float) -> float: ...

    @abstractmethod
    def revenue_prime(self, t: float) -> float: ...

    def k_severe_second(self, t: float) -> float:
        return self._fd_second(self.k_severe_prime, t)

    def k_nonsevere_second(self, t: float) -> float:
        return self._fd_second(self.k_nonsevere_prime, t)

    def revenue_second(self, t: float) -> float:
        return self._fd_second(self.revenue_prime, t)

    def _fd_second(self, prime, t: float) -> float:
        h = 1e-6 * max(self.t_max, 1.0)
        lo = max(0.0, t - h)
        hi = min(self.t_max, t + h)
        return (prime(hi) - prime(lo)) / (hi - lo)


@dataclass(frozen=True)
class ReleaseCurves(CurveSet):
    """Built-in parametric curve family.

    K_s(t) = K_s0 * exp(-lambda_s * t) and likewise for K_ns; the revenue
    curve is the concave quadratic R(t) = R0 - a*t - (b/2)*t**2. These are
    the simplest families satisfying the shape constraints: likelihoods
    decay with slowing rate, revenue falls and falls faster the longer the
    release is delayed.
    """

    K_s0: float
    lambda_s: float
    K_ns0: float
    lambda_ns: float
    R0: float
    a: float
    b: float
    t_max: float = 10.0

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _require_finite(f.name, getattr(self, f.name)))
        if self.t_max <= 0.0:
            raise DomainError(f"t_max must be positive, got {self.t_max}")

    def k_severe(self, t: float) -> float:
        return self.K_s0 * math.exp(-self.lambda_s * t)

    def k_nonsevere(self, t: float) -> float:
        return self.K_ns0 * math.exp(-self.lambda_ns * t)

    def revenue(self, t: float) -> float:
        return self.R0 - self.a * t - 0.5 * self.b * t * t

    def k_severe_prime(self, t: float) -> float:
        return -self.lambda_s * self.k_severe(t)

    def k_nonsevere_prime(self, t: float) -> float:
        return -self.lambda_ns * self.k_nonsevere(t)

    def revenue_prime(self, t: float) -> float:
        return -self.a - self.b * t

    def k_severe_second(self, t: float) -> float:
        return self.lambda_s * self.lambda_s * self.k_severe(t)

    def k_nonsevere_second(self, t: float) -> float:
        return self.lambda_ns * self.lambda_ns * self.k_nonsevere(t)

    def revenue_second(self, t: float) -> float:
        return -self.b

    def replace(self, **changes) -> "ReleaseCurves":
        kwargs = {f.name: getattr(self, f.name) for f in fields(self)}
        kwargs.update(changes)
        return ReleaseCurves(**kwargs)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class VendorDecision:
    """Stage-1 choice triple: release time t and bounties p_s, p_ns."""

    t: float
    p_s: float
    p_ns: float

    def __post_init__(self):
        for name in ("t", "p_s", "p_ns"):
            object.__setattr__(self, name, _require_finite(name, getattr(self, name)))

    def replace(self, **changes) -> "VendorDecision":
        kwargs = {f.name: getattr(self, f.name) for f in fields(self)}
        kwargs.update(changes)
        return VendorDecision(**kwargs)

    def to_dict(self) -> dict:
        return {"t": self.t, "p_s": self.p_s, "p_ns": self.p_ns}


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of ``validate``: hard failures and soft warnings."""

    passed: bool
    failures: tuple[str, ...]
    warnings: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "failures": list(self.failures),
            "warnings": list(self.warnings),
        }


def _check_t(curves: CurveSet, t: float) -> float:
    t = float(t)
    if not math.isfinite(t) or t < 0.0 or t > curves.t_max:
        raise DomainError(f"t = {t!r} is outside [0, {curves.t_max}]")
    return t


def k_severe(curves: CurveSet, t: float) -> float:
    """Likelihood of a residual severe bug at release time t."""
    return curves.k_severe(_check_t(curves, t))


def k_nonsevere(curves: CurveSet, t: float) -> float:
    """Likelihood of a residual non-severe bug at release time t."""
    return curves.k_nonsevere(_check_t(curves, t))


def revenue(curves: CurveSet, t: float) -> float:
    """Vendor revenue when releasing at time t."""
    return curves.revenue(_check_t(curves, t))


def validate(params: MarketParams, curves: CurveSet) -> ValidationReport:
    """Check every model assumption, returning a report instead of raising.

    Parameter checks are direct. Curve shape is checked numerically: values
    and first and second finite differences are sampled on a grid of
    ``SHAPE_GRID_POINTS`` points over [0, t_max], so the check applies to
    user-supplied curve implementations as well as the built-in family.
    The cost asymmetry TC_s >> TC_ns is qualitative in the model, so a mild
    ratio only triggers a warning rather than a failure.
    """
    failures: list[str] = []
    warnings: list[str] = []

    if params.n < 1:
        failures.append("n >= 1")
    if params.l < 1:
        failures.append("l >= 1")
    if params.m < 1:
        failures.append("m >= 1")
    if not params.c_w > 1.0:
        failures.append("c_w > 1")
    if not params.c_b > 1.0:
        failures.append("c_b > 1")
    if not 0.0 < params.x < 1.0:
        failures.append("x in (0, 1)")
    if not params.TC_ns > 0.0:
        failures.append("TC_ns > 0")
    if not params.TC_s > params.TC_ns:
        failures.append("TC_s > TC_ns")
    elif params.TC_s < 10.0 * params.TC_ns:
        warnings.append("TC_s >> TC_ns")
    if params.r_s < 0.0:
        failures.append("r_s >= 0")
    if params.W < 0.0:
        failures.append("W >= 0")

    if isinstance(curves, ReleaseCurves):
        if not 0.0 < curves.K_s0 <= 1.0:
            failures.append("K_s0 in (0, 1]")
        if not curves.lambda_s > 0.0:
            failures.append("lambda_s > 0")
        if not 0.0 < curves.K_ns0 <= 1.0:
            failures.append("K_ns0 in (0, 1]")
        if not curves.lambda_ns > 0.0:
            failures.append("lambda_ns > 0")
        if not curves.R0 > 0.0:
            failures.append("R0 > 0")
        if not curves.a > 0.0:
            failures.append("a > 0")
        if curves.b < 0.0:
            failures.append("b >= 0")

    grid = np.linspace(0.0, curves.t_max, SHAPE_GRID_POINTS)
    ks = np.array([curves.k_severe(t) for t in grid])
    kns = np.array([curves.k_nonsevere(t) for t in grid])
    rev = np.array([curves.revenue(t) for t in grid])

    for name, vals in (("K_s", ks), ("K_ns", kns)):
        scale = max(1.0, float(np.max(np.abs(vals))))
        tol = 1e-12 * scale
        if np.any(vals <= 0.0) or np.any(vals > 1.0 + tol):
            failures.append(f"{name}(t) in (0, 1]")
        d1 = np.diff(vals)
        if not np.all(d1 < 0.0):
            failures.append(f"{name}'(t) < 0")
        if not np.all(np.diff(d1) >= -tol):
            failures.append(f"{name}''(t) >= 0")

    rev_scale = max(1.0, float(np.max(np.abs(rev))))
    rev_tol = 1e-12 * rev_scale
    d1 = np.diff(rev)
    if not np.all(d1 < 0.0):
        failures.append("R'(t) < 0")
    if not np.all(np.diff(d1) <= rev_tol):
        failures.append("R''(t) <= 0")
    if not rev[-1] > 0.0:
        failures.append("R(t_max) > 0")

    return ValidationReport(
        passed=not failures, failures=tuple(failures), warnings=tuple(warnings)
    )
