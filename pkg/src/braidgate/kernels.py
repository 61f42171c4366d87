"""Hot numeric kernels: numba-jitted fast path with a pure-numpy fallback.

The quadric violation scan is the inner loop of every separability verdict
and gets hit thousands of times by seeded sweeps, so it is compiled with
numba when available. Set the environment variable ``BRAIDGATE_NO_NUMBA``
to any non-empty value to force the pure-numpy path (the fallback is also
selected automatically when numba is not importable).

Both implementations return ``(index_of_first_maximum, maximum)`` over
``|e[ka]*e[la] - e[kp]*e[lp]|``. They may differ in the last ulp (the
vectorized and the compiled complex arithmetic round independently), so
callers must not rely on cross-backend bitwise identity; within one backend
results are deterministic. See ``benchmarks/bench_quadrics.py`` for a speed
comparison.
"""

from __future__ import annotations

import math
import os

import numpy as np


def max_violation_numpy(entries: np.ndarray, ka, la, kp, lp) -> tuple[int, float]:
    """Vectorized scan for the largest quadric residual magnitude."""
    res = np.abs(entries[ka] * entries[la] - entries[kp] * entries[lp])
    idx = int(np.argmax(res))
    return idx, float(res[idx])


def _scan_loop(entries, ka, la, kp, lp):
    # track the squared magnitude; one sqrt at the end
    best = -1.0
    best_idx = 0
    for i in range(ka.shape[0]):
        r = entries[ka[i]] * entries[la[i]] - entries[kp[i]] * entries[lp[i]]
        mag2 = r.real * r.real + r.imag * r.imag
        if mag2 > best:
            best = mag2
            best_idx = i
    return best_idx, best


try:
    from numba import njit

    _scan_jit = njit(cache=True)(_scan_loop)

    def max_violation_numba(entries, ka, la, kp, lp) -> tuple[int, float]:
        idx, best2 = _scan_jit(
            np.asarray(entries, dtype=np.complex128),
            np.asarray(ka, dtype=np.int64),
            np.asarray(la, dtype=np.int64),
            np.asarray(kp, dtype=np.int64),
            np.asarray(lp, dtype=np.int64),
        )
        return int(idx), math.sqrt(best2)

except ImportError:  # pragma: no cover - exercised only without numba
    max_violation_numba = None


if max_violation_numba is None or os.environ.get("BRAIDGATE_NO_NUMBA"):
    _ACTIVE = "numpy"
    max_violation_scan = max_violation_numpy
else:
    _ACTIVE = "numba"
    max_violation_scan = max_violation_numba


def active_backend() -> str:
    """Name of the backend behind :func:`max_violation_scan`."""
    return _ACTIVE
