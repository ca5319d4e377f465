"""Shared fixtures: the canonical worked-example scenario.

The baseline market has 3 experts, 5 non-experts, and 4 black hats, with
curve constants tuned so the severity likelihoods at t = 2.0 are exactly
0.5 and 0.8 in binary64. Most golden values in the tests were derived by
hand at those two constants.
"""

from __future__ import annotations

import pytest

from bountygame import MarketParams, ReleaseCurves, VendorDecision

# exp(-2 * LAMBDA_S) * 0.9 == 0.5 and exp(-2 * LAMBDA_NS) * 0.95 == 0.8,
# exactly, as floats. The second constant is nudged 2 ulps off
# log(0.95/0.8)/2 to make the product round to 0.8.
LAMBDA_S = 0.29389333245105953
LAMBDA_NS = 0.08592512846332954


@pytest.fixture
def s0_params() -> MarketParams:
    return MarketParams(
        n=3, l=5, m=4,
        c_w=2.0, c_b=2.0,
        r_s=1.0, W=8.0,
        TC_s=40.0, TC_ns=1.0, x=0.5,
    )


@pytest.fixture
def s0_curves() -> ReleaseCurves:
    return ReleaseCurves(
        K_s0=0.9, lambda_s=LAMBDA_S,
        K_ns0=0.95, lambda_ns=LAMBDA_NS,
        R0=100.0, a=2.0, b=0.5, t_max=10.0,
    )


@pytest.fixture
def s0_decision() -> VendorDecision:
    return VendorDecision(t=2.0, p_s=2.5, p_ns=0.5)
