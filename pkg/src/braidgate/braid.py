"""Yang-Baxter checks and braid-group representations on dense matrices.

The braided Yang-Baxter equation on V (x) V (x) V reads

    (R (x) I)(I (x) R)(R (x) I) = (I (x) R)(R (x) I)(I (x) R)

and is verified here by brute-force dense products, which keeps the checker
independent of any structure the candidate R may have. Generators of the
n-strand braid group are represented by placing R on adjacent factor pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, ResourceLimitError
from .tensorops import _as_matrix, kron

# Dense representation matrices are capped at this size (rows = columns).
REP_DIM_CAP = 4096

DEFAULT_YBE_TOL = 1e-12


@dataclass(frozen=True)
class YbeReport:
    residual: float
    passed: bool
    tolerance: float


@dataclass(frozen=True)
class BraidWord:
    """A word in braid generators: letter i means b_i, -i means b_i^-1."""

    n_strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        n = int(self.n_strands)
        letters = tuple(int(x) for x in self.letters)
        if n < 2:
            raise InputError("a braid word needs at least 2 strands")
        for x in letters:
            if x == 0 or not 1 <= abs(x) <= n - 1:
                raise InputError(f"letter {x} outside +-1..{n - 1}")
        object.__setattr__(self, "n_strands", n)
        object.__setattr__(self, "letters", letters)


@dataclass(frozen=True)
class RelationCheck:
    kind: str  # "far_commutation" or "braid"
    i: int
    j: int | None
    residual: float
    passed: bool


@dataclass(frozen=True)
class BraidRelationReport:
    n_strands: int
    tolerance: float
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)


def swap_gate(dim: int) -> np.ndarray:
    """The tensor swap on C^dim (x) C^dim: |a,b> -> |b,a>."""
    dim = int(dim)
    if dim < 1:
        raise InputError("swap gate needs dim >= 1")
    s = np.zeros((dim * dim, dim * dim), dtype=np.complex128)
    for a in range(dim):
        for b in range(dim):
            s[b * dim + a, a * dim + b] = 1.0
    return s


def r_from_phase_matrix(phases) -> np.ndarray:
    """Phase-decorated swap: maps |r,s> to M[s,r] |s,r>.

    Row (k,l) holds M[k,l] at column (l,k). For any complex matrix M the
    result solves the braided Yang-Baxter equation; it is unitary exactly
    when every entry of M is unimodular.
    """
    m = _as_matrix(phases, "phase matrix")
    if m.shape[0] != m.shape[1]:
        raise InputError(f"phase matrix must be square, got {m.shape}")
    dim = m.shape[0]
    r = np.zeros((dim * dim, dim * dim), dtype=np.complex128)
    for k in range(dim):
        for l in range(dim):
            r[k * dim + l, l * dim + k] = m[k, l]
    return r


def _infer_factor_dim(r: np.ndarray, dim: int | None) -> int:
    if r.shape[0] != r.shape[1]:
        raise InputError(f"R must be square, got {r.shape}")
    if dim is None:
        dim = math.isqrt(r.shape[0])
    if dim * dim != r.shape[0]:
        raise InputError(f"matrix size {r.shape[0]} is not dim^2 for dim={dim}")
    return dim


def check_yang_baxter(r, dim: int | None = None, tol: float = DEFAULT_YBE_TOL) -> YbeReport:
    """Residual of the braided Yang-Baxter equation for R on C^dim (x) C^dim."""
    r = _as_matrix(r, "R")
    dim = _infer_factor_dim(r, dim)
    if dim**3 > REP_DIM_CAP:
        raise ResourceLimitError(f"dense YBE check at dim {dim} exceeds cap {REP_DIM_CAP}")
    eye = np.eye(dim, dtype=np.complex128)
    a = kron(r, eye)
    b = kron(eye, r)
    residual = float(np.max(np.abs(a @ b @ a - b @ a @ b)))
    return YbeReport(residual, residual <= tol, tol)


def to_algebraic(r, dim: int | None = None) -> np.ndarray:
    """Compose with the flat crossing: returns swap @ R."""
    r = _as_matrix(r, "R")
    dim = _infer_factor_dim(r, dim)
    return swap_gate(dim) @ r


def check_algebraic_yang_baxter(
    x, dim: int | None = None, tol: float = DEFAULT_YBE_TOL
) -> YbeReport:
    """Residual of X12 X13 X23 = X23 X13 X12 on three factors.

    A reported measurement: nothing in this package asserts which inputs
    satisfy it, beyond the classical fact that a braided solution composed
    with the swap does.
    """
    x = _as_matrix(x, "X")
    dim = _infer_factor_dim(x, dim)
    if dim**3 > REP_DIM_CAP:
        raise ResourceLimitError(f"dense YBE check at dim {dim} exceeds cap {REP_DIM_CAP}")
    eye = np.eye(dim, dtype=np.complex128)
    x12 = kron(x, eye)
    x23 = kron(eye, x)
    s23 = kron(eye, swap_gate(dim))
    x13 = s23 @ x12 @ s23
    residual = float(np.max(np.abs(x12 @ x13 @ x23 - x23 @ x13 @ x12)))
    return YbeReport(residual, residual <= tol, tol)


def braid_generator_rep(
    r, dim: int, n_strands: int, i: int, max_dim: int = REP_DIM_CAP
) -> np.ndarray:
    """tau(b_i) on n strands: identities around R at factors i, i+1."""
    r = _as_matrix(r, "R")
    dim = _infer_factor_dim(r, dim)
    n_strands = int(n_strands)
    if n_strands < 2:
        raise InputError("need at least 2 strands")
    if not 1 <= i <= n_strands - 1:
        raise InputError(f"generator index {i} outside 1..{n_strands - 1}")
    total = dim**n_strands
    if total > max_dim:
        raise ResourceLimitError(f"representation size {total} exceeds cap {max_dim}")
    left = np.eye(dim ** (i - 1), dtype=np.complex128)
    right = np.eye(dim ** (n_strands - i - 1), dtype=np.complex128)
    return kron(kron(left, r, max_dim=max_dim), right, max_dim=max_dim)


def evaluate_braid_word(
    word: BraidWord, r, dim: int, max_dim: int = REP_DIM_CAP
) -> np.ndarray:
    """Ordered product of tau(b_i)^(+-1) over the word's letters.

    The first letter is the leftmost factor. R must be invertible; exact
    singularity is an input error.
    """
    r = _as_matrix(r, "R")
    dim = _infer_factor_dim(r, dim)
    total = dim**word.n_strands
    if total > max_dim:
        raise ResourceLimitError(f"representation size {total} exceeds cap {max_dim}")
    r_inv = None
    if any(x < 0 for x in word.letters):
        try:
            r_inv = np.linalg.inv(r)
        except np.linalg.LinAlgError as exc:
            raise InputError("R is singular; braid letters need an inverse") from exc
    out = np.eye(total, dtype=np.complex128)
    for letter in word.letters:
        factor = r if letter > 0 else r_inv
        out = out @ braid_generator_rep(factor, dim, word.n_strands, abs(letter), max_dim)
    return out


def check_braid_relations(
    r,
    dim: int,
    n_strands: int,
    tol: float = DEFAULT_YBE_TOL,
    max_dim: int = REP_DIM_CAP,
) -> BraidRelationReport:
    """Residuals of the two Artin relations in the dense representation.

    Far commutation b_i b_j = b_j b_i is checked for every pair with
    |i - j| >= 2 (it holds for any R since the supports are disjoint); the
    braid relation b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1} for every adjacent
    pair.
    """
    r = _as_matrix(r, "R")
    dim = _infer_factor_dim(r, dim)
    n_strands = int(n_strands)
    if n_strands < 2:
        raise InputError("need at least 2 strands")
    if dim**n_strands > max_dim:
        raise ResourceLimitError(f"representation size {dim**n_strands} exceeds cap {max_dim}")
    reps = {
        i: braid_generator_rep(r, dim, n_strands, i, max_dim)
        for i in range(1, n_strands)
    }
    checks: list[RelationCheck] = []
    for i in range(1, n_strands):
        for j in range(i + 2, n_strands):
            residual = float(np.max(np.abs(reps[i] @ reps[j] - reps[j] @ reps[i])))
            checks.append(RelationCheck("far_commutation", i, j, residual, residual <= tol))
    for i in range(1, n_strands - 1):
        lhs = reps[i] @ reps[i + 1] @ reps[i]
        rhs = reps[i + 1] @ reps[i] @ reps[i + 1]
        residual = float(np.max(np.abs(lhs - rhs)))
        checks.append(RelationCheck("braid", i, None, residual, residual <= tol))
    return BraidRelationReport(n_strands, tol, tuple(checks))
