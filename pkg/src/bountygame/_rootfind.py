"""Scalar root finding and 1-D maximization helpers.

The solvers here are deliberately small and deterministic. ``newton_bisect``
is the classic safeguarded Newton: it keeps a sign-changing bracket at all
times and falls back to bisection whenever the Newton step leaves the
bracket or fails to shrink it fast enough. Termination is on the residual
|f(x)| <= ftol, which is the contract the release-time first-order
conditions are solved under.
"""

from __future__ import annotations

from typing import Callable

from .errors import ConvergenceError

__all__ = ["bisect_root", "newton_bisect", "golden_section_max"]


def bisect_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    ftol: float = 1e-9,
    max_iter: int = 200,
) -> float:
    """Find a root of f on [lo, hi] by bisection.

    Requires f(lo) and f(hi) to have opposite signs (or be zero).
    """
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ConvergenceError(
            f"no sign change on [{lo}, {hi}]", last_iterate=(lo, hi), residuals=(flo, fhi)
        )
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        x = 0.5 * (lo + hi)
        fx = f(x)
        if abs(fx) <= ftol or hi - lo <= 4.0 * abs(x) * 2.2e-16:
            return x
        if flo * fx < 0.0:
            hi = x
        else:
            lo, flo = x, fx
    raise ConvergenceError(
        f"bisection did not reach |f| <= {ftol} in {max_iter} iterations",
        last_iterate=x,
        residuals=(f(x),),
        iterations=max_iter,
    )


def newton_bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    fprime: Callable[[float], float] | None = None,
    ftol: float = 1e-9,
    max_iter: int = 200,
) -> float:
    """Safeguarded Newton with a bisection fallback on [lo, hi].

    When ``fprime`` is omitted the slope is taken by a central difference
    scaled to the bracket width; the bracket safeguard makes the method
    robust either way.
    """
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ConvergenceError(
            f"no sign change on [{lo}, {hi}]", last_iterate=(lo, hi), residuals=(flo, fhi)
        )

    x = 0.5 * (lo + hi)
    fx = f(x)
    for it in range(max_iter):
        if abs(fx) <= ftol:
            return x
        if fprime is not None:
            slope = fprime(x)
        else:
            h = 1e-7 * max(hi - lo, abs(x), 1e-30)
            slope = (f(x + h) - f(x - h)) / (2.0 * h)
        took_newton = False
        if slope != 0.0:
            x_new = x - fx / slope
            if lo < x_new < hi:
                took_newton = True
        if not took_newton:
            x_new = 0.5 * (lo + hi)
        f_new = f(x_new)
        # Maintain the sign-changing bracket.
        if flo * f_new < 0.0:
            hi = x_new
        else:
            lo, flo = x_new, f_new
        x, fx = x_new, f_new
        if hi - lo <= 4.0 * abs(x) * 2.2e-16 and abs(fx) <= max(ftol, 1e-6 * abs(flo)):
            return x
    raise ConvergenceError(
        f"newton_bisect did not reach |f| <= {ftol} in {max_iter} iterations",
        last_iterate=x,
        residuals=(fx,),
        iterations=max_iter,
    )


_INV_PHI = 0.6180339887498949  # (sqrt(5) - 1) / 2


def golden_section_max(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    xtol: float = 1e-10,
    max_iter: int = 500,
) -> float:
    """Golden-section search for a maximizer of f on [lo, hi].

    Assumes f is unimodal on the interval; returns the midpoint of the
    final bracket. Endpoints are compared too, so a boundary maximum of a
    monotone objective is returned correctly.
    """
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc = f(c)
    fd = f(d)
    for _ in range(max_iter):
        if b - a <= xtol * max(1.0, abs(a), abs(b)):
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    candidates = [(f(lo), lo), (f(hi), hi), (f(x), x)]
    return max(candidates, key=lambda p: p[0])[1]
