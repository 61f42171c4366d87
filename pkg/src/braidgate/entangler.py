"""Monomial gate entanglers built from a coefficient tensor.

For m subsystems of equal dimension N the entangler R is an N^m x N^m
monomial matrix: rows 1 and n (1-based, n = N^m) keep their diagonal entry,
every middle row r has its single nonzero at column n+1-r. Two fill
conventions exist for the middle antidiagonal and both are supported:

* ``paper-matrix``: row r holds the coefficient with linear index n+1-r,
  i.e. the antidiagonal lists the coefficients in reverse lex order;
* ``theorem``: row r holds coefficient r, so R applied to the uniform
  product state returns the coefficient vector bit-for-bit, and the gate is
  entangling exactly when the coefficient tensor is entangled.

The two agree on the pattern and on the corner values but order the middle
coefficients oppositely, so they genuinely differ for N >= 3: a rank-1
coefficient tensor can have an entangled ``paper-matrix`` image (see
:func:`certify_entangler`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .segre import (
    DEFAULT_SEPARABILITY_TOL,
    SeparabilityVerdict,
    is_fully_separable,
)
from .tensorops import CoefficientTensor, StateVector, is_unitary, uniform_product_state


class Convention(str, enum.Enum):
    """Antidiagonal fill order for the entangler's middle rows."""

    PAPER_MATRIX = "paper-matrix"
    THEOREM = "theorem"


def as_convention(value) -> Convention:
    if isinstance(value, Convention):
        return value
    try:
        return Convention(value)
    except ValueError as exc:
        names = ", ".join(c.value for c in Convention)
        raise InputError(f"unknown convention {value!r} (expected one of: {names})") from exc


@dataclass(frozen=True, eq=False)
class MonomialGateMatrix:
    """Square matrix with exactly one nonzero per row and per column.

    Stored sparsely: ``col_of_row[r]`` is the 0-based column of row r's
    nonzero and ``value_of_row[r]`` its value. ``col_of_row`` must be a
    permutation, which makes the one-per-column property structural.
    """

    n: int
    col_of_row: np.ndarray
    value_of_row: np.ndarray

    def __post_init__(self):
        n = int(self.n)
        cols = np.ascontiguousarray(self.col_of_row, dtype=np.int64)
        vals = np.ascontiguousarray(self.value_of_row, dtype=np.complex128)
        if n < 1 or cols.shape != (n,) or vals.shape != (n,):
            raise InputError("column and value arrays must both have length n >= 1")
        if not np.array_equal(np.sort(cols), np.arange(n)):
            raise InputError("col_of_row is not a permutation of 0..n-1")
        if not np.isfinite(vals).all():
            raise InputError("monomial values contain non-finite entries")
        cols.setflags(write=False)
        vals.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "col_of_row", cols)
        object.__setattr__(self, "value_of_row", vals)

    @property
    def is_diagonal(self) -> bool:
        return bool(np.array_equal(self.col_of_row, np.arange(self.n)))

    def nonzeros(self) -> list[tuple[int, int, complex]]:
        """(row, col, value) triples, 1-based, in row order."""
        return [
            (r + 1, int(self.col_of_row[r]) + 1, complex(self.value_of_row[r]))
            for r in range(self.n)
        ]

    def dense(self) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=np.complex128)
        out[np.arange(self.n), self.col_of_row] = self.value_of_row
        return out

    def apply(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.complex128).reshape(-1)
        if v.size != self.n:
            raise InputError(f"cannot apply {self.n}x{self.n} monomial to length-{v.size} vector")
        return self.value_of_row * v[self.col_of_row]

    def compose(self, other: "MonomialGateMatrix") -> "MonomialGateMatrix":
        """Matrix product self @ other, staying in monomial form."""
        if self.n != other.n:
            raise InputError(f"size mismatch {self.n} vs {other.n}")
        return MonomialGateMatrix(
            self.n,
            other.col_of_row[self.col_of_row],
            self.value_of_row * other.value_of_row[self.col_of_row],
        )

    def adjoint(self) -> "MonomialGateMatrix":
        cols = np.empty(self.n, dtype=np.int64)
        vals = np.empty(self.n, dtype=np.complex128)
        cols[self.col_of_row] = np.arange(self.n)
        vals[self.col_of_row] = np.conj(self.value_of_row)
        return MonomialGateMatrix(self.n, cols, vals)


def _entangler_pattern(n: int) -> np.ndarray:
    cols = np.arange(n - 1, -1, -1, dtype=np.int64)
    cols[0] = 0
    cols[n - 1] = n - 1
    return cols


def _uniform_dim(tensor: CoefficientTensor) -> int:
    first = tensor.dims[0]
    if any(d != first for d in tensor.dims):
        raise InputError(f"entangler construction needs uniform dims, got {tensor.dims}")
    return first


def construct_entangler(
    tensor: CoefficientTensor, convention=Convention.THEOREM
) -> MonomialGateMatrix:
    """Build the monomial entangler for a uniform-dimension tensor.

    Rows 1 and n are diagonal and carry the first and last coefficient;
    middle row r sits at column n+1-r and carries the coefficient selected
    by ``convention`` (reverse lex order for ``paper-matrix``, forward for
    ``theorem``).
    """
    convention = as_convention(convention)
    _uniform_dim(tensor)
    n = tensor.size
    if n < 2:
        raise InputError("entangler needs at least 2 basis states")
    values = np.array(
        tensor.entries[::-1] if convention is Convention.PAPER_MATRIX else tensor.entries
    )
    values[0] = tensor.entries[0]
    values[n - 1] = tensor.entries[n - 1]
    return MonomialGateMatrix(n, _entangler_pattern(n), values)


def pattern_permutation(n: int) -> MonomialGateMatrix:
    """The swap-pattern permutation: rows 1 and n fixed, middle rows reversed."""
    n = int(n)
    if n < 2:
        raise InputError("pattern permutation needs n >= 2")
    return MonomialGateMatrix(n, _entangler_pattern(n), np.ones(n, dtype=np.complex128))


def phase_gate(tensor: CoefficientTensor, convention=Convention.THEOREM) -> MonomialGateMatrix:
    """Diagonal gate R @ P; diagonal entries are R's row values."""
    gate = construct_entangler(tensor, convention)
    tau = gate.compose(pattern_permutation(gate.n))
    if not tau.is_diagonal:
        raise AssertionError("phase gate composition must be diagonal")
    return tau


def apply_entangler(tensor: CoefficientTensor, convention=Convention.THEOREM) -> StateVector:
    """Apply the entangler to the all-ones product state.

    Under the ``theorem`` convention the output amplitudes equal the
    coefficient list bit-for-bit; under ``paper-matrix`` the middle
    amplitudes appear at the digit-complemented positions instead.
    """
    gate = construct_entangler(tensor, convention)
    psi = uniform_product_state(tensor.dims)
    return StateVector(tensor.dims, gate.apply(psi.amplitudes))


@dataclass(frozen=True)
class EntanglerReport:
    """Independent facts about one entangler: gate quality and entangling power."""

    convention: Convention
    unitary: bool
    unitarity_residual: float
    entangling: SeparabilityVerdict
    coefficient_verdict: SeparabilityVerdict


def certify_entangler(
    tensor: CoefficientTensor,
    convention=Convention.THEOREM,
    unitary_tol: float = 1e-12,
    separability_tol: float = DEFAULT_SEPARABILITY_TOL,
) -> EntanglerReport:
    """Certify unitarity and entangling power of the constructed gate.

    Unitarity holds exactly when every coefficient is unimodular (within
    tolerance). The entangling verdict tests the output state; the
    coefficient verdict tests the input tensor directly. Under the
    ``theorem`` convention the two verdicts coincide for every input; under
    ``paper-matrix`` they can diverge.
    """
    convention = as_convention(convention)
    gate = construct_entangler(tensor, convention)
    unitary, residual = is_unitary(gate.dense(), unitary_tol)
    out = apply_entangler(tensor, convention)
    return EntanglerReport(
        convention=convention,
        unitary=unitary,
        unitarity_residual=residual,
        entangling=is_fully_separable(out.to_tensor(), separability_tol),
        coefficient_verdict=is_fully_separable(tensor, separability_tol),
    )
