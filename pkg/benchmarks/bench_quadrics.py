"""Benchmark the quadric violation scan: numba kernel vs pure numpy.

The scan is the inner loop of every separability verdict; this script times
both backends over a range of tensor shapes and batch sizes and prints a
speedup table. Run from the repository root:

    python3 benchmarks/bench_quadrics.py [--repeats 7] [--batch 2000]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from braidgate.kernels import max_violation_numba, max_violation_numpy
from braidgate.segre import _generator_table

SHAPES = [(3, 3), (3, 3, 3), (4, 4, 4), (5, 5, 5), (6, 6, 6)]


def batch_inputs(dims, batch, seed=0):
    rng = np.random.default_rng(seed)
    n = math.prod(dims)
    tensors = rng.normal(size=(batch, n)) + 1j * rng.normal(size=(batch, n))
    _, arrays = _generator_table(dims)
    return tensors, arrays


def time_backend(fn, tensors, arrays, repeats):
    ka, la, kp, lp = arrays
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        acc = 0.0
        for entries in tensors:
            _, val = fn(entries, ka, la, kp, lp)
            acc += val
        best = min(best, time.perf_counter() - start)
    return best, acc


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--batch", type=int, default=2000)
    args = parser.parse_args()

    if max_violation_numba is None:
        raise SystemExit("numba is not importable; nothing to compare")

    print(f"{'shape':>12} {'generators':>10} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for dims in SHAPES:
        tensors, arrays = batch_inputs(dims, args.batch)
        # warm up the JIT (and the cache) outside the timed region
        max_violation_numba(tensors[0], *arrays)
        t_np, acc_np = time_backend(max_violation_numpy, tensors, arrays, args.repeats)
        t_nb, acc_nb = time_backend(max_violation_numba, tensors, arrays, args.repeats)
        if not np.isclose(acc_np, acc_nb, rtol=1e-12):
            raise SystemExit(f"backend results diverged on {dims}: {acc_np} vs {acc_nb}")
        shape = "x".join(str(d) for d in dims)
        print(
            f"{shape:>12} {len(arrays[0]):>10} {1e3 * t_np:>10.2f} "
            f"{1e3 * t_nb:>10.2f} {t_np / t_nb:>8.2f}x"
        )


if __name__ == "__main__":
    main()
