"""Full-separability tests for pure multipartite states.

A nonzero coefficient tensor describes a fully separable pure state exactly
when it is an outer product of one vector per subsystem, which happens
exactly when every degree-2 generator

    g = a[k] * a[l] - a[k with l_j at slot j] * a[l with k_j at slot j]

vanishes. The generators are the 2x2 minors of the mode flattenings; this
module enumerates them once per shape (deduplicating minors that several
modes share), evaluates them through the kernel backend, and cross-checks
verdicts with an independent rank-1 oracle based on singular values of the
flattenings.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .kernels import max_violation_scan
from .tensorops import (
    CoefficientTensor,
    _as_dims,
    flatten_mode,
    lex_index,
    validate_multi_index,
)

# Verdicts whose normalized residual lands in this open band are flagged as
# marginal: classification still uses the caller's hard threshold.
MARGINAL_LOW = 1e-12
MARGINAL_HIGH = 1e-6

DEFAULT_SEPARABILITY_TOL = 1e-9


@dataclass(frozen=True)
class QuadricGenerator:
    """One separability generator: slot ``j`` plus index pair ``(k, l)``.

    Canonical form, enforced at construction: ``k[j-1] < l[j-1]`` and the
    remaining digits of ``k`` lex-precede those of ``l``.
    """

    slot: int
    k: tuple[int, ...]
    l: tuple[int, ...]
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = _as_dims(self.dims)
        k = validate_multi_index(self.k, dims)
        l = validate_multi_index(self.l, dims)
        if not 1 <= self.slot <= len(dims):
            raise InputError(f"slot {self.slot} outside 1..{len(dims)}")
        j = self.slot - 1
        if not k[j] < l[j]:
            raise InputError(f"non-canonical generator: digits {k[j]} !< {l[j]} at slot {self.slot}")
        if not k[:j] + k[j + 1:] < l[:j] + l[j + 1:]:
            raise InputError("non-canonical generator: remaining digits not lex-increasing")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "dims", dims)

    def swapped(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """The index pair of the subtracted product (slot digits exchanged)."""
        j = self.slot - 1
        kp = self.k[:j] + (self.l[j],) + self.k[j + 1:]
        lp = self.l[:j] + (self.k[j],) + self.l[j + 1:]
        return kp, lp


@dataclass(frozen=True)
class SeparabilityVerdict:
    """Outcome of a full-separability test.

    ``max_violation`` is the largest generator magnitude after the tensor is
    scaled so its max-modulus entry is 1. ``witness`` is the first generator
    attaining it, present only when the state is entangled.
    """

    separable: bool
    max_violation: float
    witness: QuadricGenerator | None
    tolerance_used: float

    @property
    def marginal(self) -> bool:
        return MARGINAL_LOW < self.max_violation < MARGINAL_HIGH


@functools.lru_cache(maxsize=64)
def _generator_table(dims: tuple[int, ...]):
    """Canonical generators for ``dims`` plus flat 0-based index arrays.

    Enumeration order: slot ascending, then slot-digit pair, then the lex
    pair of remaining digits. Generators that repeat an earlier one as a
    polynomial (identical product pairs, which happens whenever a minor
    involves only two varying slots) are dropped, keeping the first
    occurrence.
    """
    m = len(dims)
    gens: list[QuadricGenerator] = []
    seen: set = set()
    flat_idx: list[tuple[int, int, int, int]] = []
    for j in range(m):
        rest_dims = dims[:j] + dims[j + 1:]
        rests = list(itertools.product(*[range(1, d + 1) for d in rest_dims]))
        for a, b in itertools.combinations(range(1, dims[j] + 1), 2):
            for u, v in itertools.combinations(rests, 2):
                k = u[:j] + (a,) + u[j:]
                l = v[:j] + (b,) + v[j:]
                kp = u[:j] + (b,) + u[j:]
                lp = v[:j] + (a,) + v[j:]
                key = (k, l, *sorted((kp, lp)))
                if key in seen:
                    continue
                seen.add(key)
                gens.append(QuadricGenerator(j + 1, k, l, dims))
                flat_idx.append(
                    (
                        lex_index(k, dims) - 1,
                        lex_index(l, dims) - 1,
                        lex_index(kp, dims) - 1,
                        lex_index(lp, dims) - 1,
                    )
                )
    arrays = tuple(
        np.ascontiguousarray(col, dtype=np.int64) for col in zip(*flat_idx)
    )
    for arr in arrays:
        arr.setflags(write=False)
    return tuple(gens), arrays


def quadric_generators(dims) -> tuple[QuadricGenerator, ...]:
    """All canonical separability generators for the given shape.

    Needs at least two slots; a single subsystem has no quadrics.
    """
    dims = _as_dims(dims)
    if len(dims) < 2:
        raise InputError("separability generators need at least 2 slots")
    return _generator_table(dims)[0]


def evaluate_quadric(gen: QuadricGenerator, tensor: CoefficientTensor) -> complex:
    """Value of one generator on a tensor (no normalization applied)."""
    if gen.dims != tensor.dims:
        raise InputError(f"generator dims {gen.dims} do not match tensor dims {tensor.dims}")
    kp, lp = gen.swapped()
    return complex(
        tensor.at(gen.k) * tensor.at(gen.l) - tensor.at(kp) * tensor.at(lp)
    )


def _nonzero_normalized(tensor: CoefficientTensor) -> np.ndarray:
    peak = float(np.max(np.abs(tensor.entries)))
    if peak == 0.0:
        raise InputError("zero tensor is not a valid projective point")
    return tensor.entries / peak


def is_fully_separable(
    tensor: CoefficientTensor, tol: float = DEFAULT_SEPARABILITY_TOL
) -> SeparabilityVerdict:
    """Decide full separability by scanning every quadric generator.

    The tensor is scaled so its max-modulus entry is 1, making the residual
    scale-free (the generators are homogeneous of degree 2). Separable means
    every generator magnitude is at most ``tol``.
    """
    if tol <= 0:
        raise InputError("tolerance must be positive")
    entries = _nonzero_normalized(tensor)
    if tensor.n_slots < 2:
        return SeparabilityVerdict(True, 0.0, None, tol)
    gens, (ka, la, kp, lp) = _generator_table(tensor.dims)
    idx, worst = max_violation_scan(entries, ka, la, kp, lp)
    separable = worst <= tol
    return SeparabilityVerdict(separable, worst, None if separable else gens[idx], tol)


def rank1_oracle(tensor: CoefficientTensor, tol: float = DEFAULT_SEPARABILITY_TOL) -> bool:
    """Independent separability check: every flattening must have rank 1.

    True iff for each slot the second singular value of the mode flattening
    is at most ``tol`` times the first. Shares no code path with the quadric
    scan beyond the flattening itself.
    """
    if tol <= 0:
        raise InputError("tolerance must be positive")
    if not np.any(tensor.entries):
        raise InputError("zero tensor is not a valid projective point")
    for slot in range(1, tensor.n_slots + 1):
        mat = flatten_mode(tensor, slot)
        if min(mat.shape) < 2:
            continue
        s = np.linalg.svd(mat, compute_uv=False)
        if s[1] > tol * s[0]:
            return False
    return True


def segre_map(factors) -> CoefficientTensor:
    """Outer product of one coordinate vector per subsystem.

    The result is on-variety by construction: every quadric generator
    evaluates to zero up to rounding. Each factor must be nonzero
    (projective points exclude the origin).
    """
    vecs = []
    for pos, f in enumerate(factors, start=1):
        v = np.asarray(f, dtype=np.complex128).reshape(-1)
        if v.size == 0 or not np.any(v):
            raise InputError(f"factor {pos} is zero; not a projective point")
        if not np.isfinite(v).all():
            raise InputError(f"factor {pos} contains non-finite entries")
        vecs.append(v)
    if not vecs:
        raise InputError("need at least one factor")
    out = functools.reduce(np.multiply.outer, vecs)
    return CoefficientTensor.from_array(out)
