"""Time the numba kernels against their pure-numpy twins.

Runs each hot kernel at a production-sized workload on both backends and
prints median wall time over repeated runs, after a warmup pass so numba
compilation is not billed to the measurement. Usage:

    python benchmarks/bench_kernels.py [--repeats 9]
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from bountygame._kernels import (
    HAS_NUMBA,
    classify_trials,
    ewhh_grid_argmax,
    scalar_grid_argmax,
)

GRID_NPTS = 1001
GRID_STEP = 1.0 / (GRID_NPTS - 1)
TRIAL_BLOCK = 1 << 18


def _bench(fn, repeats: int) -> float:
    fn()  # warmup: triggers JIT compilation on the numba path
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=9)
    args = parser.parse_args()

    rng = np.random.Generator(np.random.Philox(7))
    u = rng.random((TRIAL_BLOCK, 4))

    workloads = {
        "ewhh_grid_argmax (1001x1001)": lambda impl: ewhh_grid_argmax(
            0.21, 0.13, 0.4, 0.1, 2.0, GRID_STEP, GRID_NPTS, impl=impl
        ),
        "scalar_grid_argmax (1001)": lambda impl: scalar_grid_argmax(
            0.17, 0.3, 2.0, GRID_STEP, GRID_NPTS, impl=impl
        ),
        f"classify_trials ({TRIAL_BLOCK})": lambda impl: classify_trials(
            u, 0.5, 0.8, 0.25, 0.4, 10.0, 40.0, 0.5, 1.0, impl=impl
        ),
    }

    backends = ["numpy"] + (["numba"] if HAS_NUMBA else [])
    print(f"{'kernel':<34} " + " ".join(f"{b:>12}" for b in backends))
    for name, call in workloads.items():
        cells = []
        for backend in backends:
            median = _bench(lambda: call(backend), args.repeats)
            cells.append(f"{median * 1e3:10.3f}ms")
        print(f"{name:<34} " + " ".join(f"{c:>12}" for c in cells))
    if not HAS_NUMBA:
        print("numba not importable; numpy path only")


if __name__ == "__main__":
    main()
