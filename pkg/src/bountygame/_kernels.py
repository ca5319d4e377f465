"""Hot numeric kernels with numba and pure-numpy twin implementations.

Two workloads dominate runtime: the brute-force best-response grids (up to
a million payoff evaluations per call) and the Monte Carlo trial loop. Both
are implemented twice, once as numba-compiled loops and once vectorized in
numpy. The twins are written so every element goes through the same
floating-point operations in the same order, which makes their outputs
bit-identical; the test suite asserts this.

Backend selection: numba is used when importable, unless the environment
variable ``BOUNTYGAME_DISABLE_NUMBA`` is set to a non-empty value, in which
case the numpy path is used. Every wrapper also accepts an explicit
``impl`` argument ("numba" or "numpy") so benchmarks can time both in one
process.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


__all__ = [
    "HAS_NUMBA",
    "default_backend",
    "ewhh_grid_argmax",
    "scalar_grid_argmax",
    "classify_trials",
]

_DISABLED = bool(os.environ.get("BOUNTYGAME_DISABLE_NUMBA"))


def default_backend() -> str:
    """Backend used when no explicit ``impl`` is passed."""
    return "numba" if (HAS_NUMBA and not _DISABLED) else "numpy"


def _resolve(impl: str | None) -> str:
    if impl is None:
        return default_backend()
    if impl not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {impl!r}")
    if impl == "numba" and not HAS_NUMBA:
        raise ValueError("numba backend requested but numba is not importable")
    return impl


# ---------------------------------------------------------------------------
# Best-response payoff grids
# ---------------------------------------------------------------------------
#
# Expert white hat deviation payoff against a fixed symmetric profile:
#   v(e_s, e_ns) = A_s*(1 + e_s - avg_s) + A_ns*(1 + e_ns - avg_ns)
#                  - 0.5*c_w*e_s^2 - 0.5*e_ns^2 - e_s*e_ns
# Single-effort hacker deviation payoff:
#   v(e) = A*(1 + e - avg) - 0.5*quad*e^2
# Ties are broken toward the first grid point in row-major order, in both
# backends.


@njit(cache=False)
def _ewhh_argmax_numba(A_s, A_ns, avg_s, avg_ns, c_w, step, npts):
    best_i = 0
    best_j = 0
    best_v = -1e300
    for i in range(npts):
        e_s = i * step
        for j in range(npts):
            e_ns = j * step
            v = A_s * (1.0 + e_s - avg_s)
            v = v + A_ns * (1.0 + e_ns - avg_ns)
            v = v - 0.5 * c_w * e_s * e_s
            v = v - 0.5 * e_ns * e_ns
            v = v - e_s * e_ns
            if v > best_v:
                best_v = v
                best_i = i
                best_j = j
    return best_i, best_j


def _ewhh_argmax_numpy(A_s, A_ns, avg_s, avg_ns, c_w, step, npts):
    grid = np.arange(npts, dtype=np.float64) * step
    e_s = grid[:, None]
    e_ns = grid[None, :]
    v = A_s * (1.0 + e_s - avg_s)
    v = v + A_ns * (1.0 + e_ns - avg_ns)
    v = v - 0.5 * c_w * e_s * e_s
    v = v - 0.5 * e_ns * e_ns
    v = v - e_s * e_ns
    flat = int(np.argmax(v))
    return flat // npts, flat % npts


def ewhh_grid_argmax(
    A_s: float,
    A_ns: float,
    avg_s: float,
    avg_ns: float,
    c_w: float,
    step: float,
    npts: int,
    impl: str | None = None,
) -> tuple[float, float]:
    """Grid argmax of the expert white hat deviation payoff on [0,1]^2."""
    if _resolve(impl) == "numba":
        i, j = _ewhh_argmax_numba(A_s, A_ns, avg_s, avg_ns, c_w, step, npts)
    else:
        i, j = _ewhh_argmax_numpy(A_s, A_ns, avg_s, avg_ns, c_w, step, npts)
    return i * step, j * step


@njit(cache=False)
def _scalar_argmax_numba(A, avg, quad, step, npts):
    best_i = 0
    best_v = -1e300
    for i in range(npts):
        e = i * step
        v = A * (1.0 + e - avg)
        v = v - 0.5 * quad * e * e
        if v > best_v:
            best_v = v
            best_i = i
    return best_i


def _scalar_argmax_numpy(A, avg, quad, step, npts):
    e = np.arange(npts, dtype=np.float64) * step
    v = A * (1.0 + e - avg)
    v = v - 0.5 * quad * e * e
    return int(np.argmax(v))


def scalar_grid_argmax(
    A: float,
    avg: float,
    quad: float,
    step: float,
    npts: int,
    impl: str | None = None,
) -> float:
    """Grid argmax of a single-effort deviation payoff on [0, 1]."""
    if _resolve(impl) == "numba":
        i = _scalar_argmax_numba(A, avg, quad, step, npts)
    else:
        i = _scalar_argmax_numpy(A, avg, quad, step, npts)
    return i * step


# ---------------------------------------------------------------------------
# Monte Carlo trial classification
# ---------------------------------------------------------------------------
#
# Per trial, four uniforms decide: severe bug existence, severe first
# finder, non-severe bug existence, non-severe first finder. Codes:
#   severe:     0 no bug, 1 expert white hat first, 2 black hat first
#   non-severe: 0 no bug, 1 non-expert white hat first, 2 user first


@njit(cache=False)
def _classify_numba(u0, u1, u2, u3, ks, kns, q_e, q_ne, cost_e, cost_b, cost_ne, cost_user):
    k = u0.shape[0]
    sev = np.zeros(k, dtype=np.int8)
    ns = np.zeros(k, dtype=np.int8)
    cost = np.zeros(k, dtype=np.float64)
    for i in range(k):
        c = 0.0
        if u0[i] < ks:
            if u1[i] < q_e:
                sev[i] = 1
                c = c + cost_e
            else:
                sev[i] = 2
                c = c + cost_b
        if u2[i] < kns:
            if u3[i] < q_ne:
                ns[i] = 1
                c = c + cost_ne
            else:
                ns[i] = 2
                c = c + cost_user
        cost[i] = c
    return sev, ns, cost


def _classify_numpy(u0, u1, u2, u3, ks, kns, q_e, q_ne, cost_e, cost_b, cost_ne, cost_user):
    sev_exists = u0 < ks
    sev_white = sev_exists & (u1 < q_e)
    sev_black = sev_exists & ~(u1 < q_e)
    ns_exists = u2 < kns
    ns_white = ns_exists & (u3 < q_ne)
    ns_user = ns_exists & ~(u3 < q_ne)

    sev = np.zeros(u0.shape[0], dtype=np.int8)
    sev[sev_white] = 1
    sev[sev_black] = 2
    ns = np.zeros(u0.shape[0], dtype=np.int8)
    ns[ns_white] = 1
    ns[ns_user] = 2

    sev_cost = np.where(sev_white, cost_e, np.where(sev_black, cost_b, 0.0))
    ns_cost = np.where(ns_white, cost_ne, np.where(ns_user, cost_user, 0.0))
    cost = (0.0 + sev_cost) + ns_cost
    return sev, ns, cost


def classify_trials(
    u: np.ndarray,
    ks: float,
    kns: float,
    q_e: float,
    q_ne: float,
    cost_e: float,
    cost_b: float,
    cost_ne: float,
    cost_user: float,
    impl: str | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Classify a (k, 4) block of uniforms into event codes and trial costs."""
    u0 = np.ascontiguousarray(u[:, 0])
    u1 = np.ascontiguousarray(u[:, 1])
    u2 = np.ascontiguousarray(u[:, 2])
    u3 = np.ascontiguousarray(u[:, 3])
    fn = _classify_numba if _resolve(impl) == "numba" else _classify_numpy
    return fn(u0, u1, u2, u3, ks, kns, q_e, q_ne, cost_e, cost_b, cost_ne, cost_user)
