"""Acceptance suite: golden matrix layouts plus seeded property sweeps.

Each test prints one ``ACCEPTANCE nn <name>: PASS|FAIL`` line (run pytest
with ``-s`` to see them live; failures also carry the details in the
assertion message).

Known red check: criterion 09 pins the generator counts (1, 18, 12) for
shapes (2,2), (3,3), (2,2,2). Those three numbers are mutually
inconsistent: for a two-slot tensor the mode-2 flattening is the transpose
of the mode-1 flattening, so the two modes contribute the same minors as
polynomials, and any deduplication that returns 1 for (2,2) necessarily
returns 9 for (3,3) (and 12 for (2,2,2), which matches). The library
deduplicates identical polynomials, so the (3,3) expectation of 18 fails
while the other two hold.
"""

import itertools

import numpy as np

from braidgate import (
    CoefficientTensor,
    QuadricGenerator,
    apply_entangler,
    certify_entangler,
    check_braid_relations,
    check_yang_baxter,
    construct_entangler,
    evaluate_quadric,
    is_fully_separable,
    is_unitary,
    lex_index,
    pattern_permutation,
    phase_gate,
    quadric_generators,
    r_from_phase_matrix,
    random_phases,
    rank1_oracle,
    segre_map,
)

SEP_TOL = 1e-9
TIGHT_TOL = 1e-12
BOUNDARY_LOW = 1e-12
BOUNDARY_HIGH = 1e-6


def _report(number: int, name: str, problems: list) -> None:
    status = "PASS" if not problems else "FAIL"
    print(f"ACCEPTANCE {number:02d} {name}: {status}")
    assert not problems, f"criterion {number}: " + "; ".join(str(p) for p in problems)


def _random_tensor(dims, rng) -> CoefficientTensor:
    n = int(np.prod(dims))
    return CoefficientTensor(dims, rng.normal(size=n) + 1j * rng.normal(size=n))


def _marker_tensor(dims) -> CoefficientTensor:
    n = int(np.prod(dims))
    return CoefficientTensor(dims, np.arange(1, n + 1, dtype=float))


def test_criterion_01_golden_9x9_entangler():
    problems = []
    gate = construct_entangler(_marker_tensor((3, 3)), "paper-matrix")
    expected = [
        (1, 1, 1), (2, 8, 8), (3, 7, 7), (4, 6, 6), (5, 5, 5),
        (6, 4, 4), (7, 3, 3), (8, 2, 2), (9, 9, 9),
    ]
    observed = [(r, c, v) for r, c, v in gate.nonzeros()]
    if observed != [(r, c, complex(v)) for r, c, v in expected]:
        problems.append(f"nonzero set {observed} != {expected}")
    dense = gate.dense()
    golden = np.zeros((9, 9), dtype=complex)
    for r, c, v in expected:
        golden[r - 1, c - 1] = v
    if not np.array_equal(dense, golden):
        problems.append("dense expansion differs from the golden 9x9 matrix")
    _report(1, "golden 9x9 entangler", problems)


def test_criterion_02_golden_pattern_and_phase_gate():
    problems = []
    p = pattern_permutation(9).dense()
    golden_p = np.zeros((9, 9), dtype=complex)
    golden_p[0, 0] = golden_p[8, 8] = 1
    for r in range(1, 8):
        golden_p[r, 8 - r] = 1
    if not np.array_equal(p, golden_p):
        problems.append("pattern permutation differs from the golden 9x9 P")
    markers = _marker_tensor((3, 3))
    tau = phase_gate(markers, "paper-matrix")
    if not tau.is_diagonal:
        problems.append("phase gate is not diagonal")
    expected_diag = np.array([1, 8, 7, 6, 5, 4, 3, 2, 9], dtype=complex)
    if not np.array_equal(tau.value_of_row, expected_diag):
        problems.append(f"phase gate diagonal {tau.value_of_row} != {expected_diag}")
    gate = construct_entangler(markers, "paper-matrix")
    if not np.array_equal(gate.dense() @ p, tau.dense()):
        problems.append("dense(R) @ dense(P) != dense(tau) exactly")
    _report(2, "golden 9x9 pattern and phase gate", problems)


# antidiagonal coefficient order of the golden 27x27 gate, rows 2..26
GOLDEN_27_MIDDLE = [
    (3, 3, 2), (3, 3, 1), (3, 2, 3), (3, 2, 2), (3, 2, 1), (3, 1, 3),
    (3, 1, 2), (3, 1, 1), (2, 3, 3), (2, 3, 2), (2, 3, 1), (2, 2, 3),
    (2, 2, 2), (2, 2, 1), (2, 1, 3), (2, 1, 2), (2, 1, 1), (1, 3, 3),
    (1, 3, 2), (1, 3, 1), (1, 2, 3), (1, 2, 2), (1, 2, 1), (1, 1, 3),
    (1, 1, 2),
]


def test_criterion_03_golden_27x27_entangler():
    problems = []
    dims = (3, 3, 3)
    markers = _marker_tensor(dims)
    gate = construct_entangler(markers, "paper-matrix")
    nonzeros = gate.nonzeros()
    if nonzeros[0] != (1, 1, complex(1)):
        problems.append(f"row 1: {nonzeros[0]}")
    if nonzeros[26] != (27, 27, complex(27)):
        problems.append(f"row 27: {nonzeros[26]}")
    for offset, digits in enumerate(GOLDEN_27_MIDDLE):
        row = offset + 2
        expected_col = 28 - row
        expected_value = complex(lex_index(digits, dims))
        if nonzeros[row - 1] != (row, expected_col, expected_value):
            problems.append(
                f"row {row}: {nonzeros[row - 1]} != ({row}, {expected_col}, {expected_value})"
            )
    _report(3, "golden 27x27 entangler", problems)


def test_criterion_04_theorem_output_identity():
    problems = []
    rng = np.random.default_rng(404)
    dims_cycle = [(2, 2), (3, 3), (2, 2, 2), (3, 3, 3)]
    for i in range(50):
        dims = dims_cycle[i % len(dims_cycle)]
        tensor = _random_tensor(dims, rng)
        out = apply_entangler(tensor, "theorem")
        if not np.array_equal(out.amplitudes, tensor.entries):
            problems.append(f"case {i}: output differs from input entries")
            continue
        vin = is_fully_separable(tensor, SEP_TOL)
        vout = is_fully_separable(out.to_tensor(), SEP_TOL)
        if vin.separable != vout.separable or vin.max_violation != vout.max_violation:
            problems.append(f"case {i}: verdicts diverge")
    _report(4, "theorem-convention output identity", problems)


def test_criterion_05_delta_form_solves_ybe():
    problems = []
    sizes = [2, 3, 4]
    for seed in range(100):
        n = sizes[seed % len(sizes)]
        phases = random_phases((n, n), 500 + seed).as_array()
        r = r_from_phase_matrix(phases)
        ybe = check_yang_baxter(r, n, TIGHT_TOL)
        if not ybe.passed:
            problems.append(f"seed {seed}: YBE residual {ybe.residual}")
        ok, residual = is_unitary(r, TIGHT_TOL)
        if not ok:
            problems.append(f"seed {seed}: unitarity residual {residual}")
    _report(5, "delta-form Yang-Baxter solutions", problems)


def test_criterion_06_braid_relations():
    problems = []
    r = r_from_phase_matrix(random_phases((2, 2), 606).as_array())
    for strands in (3, 4):
        report = check_braid_relations(r, 2, strands, TIGHT_TOL)
        for check in report.checks:
            if not check.passed:
                problems.append(
                    f"{strands} strands {check.kind} ({check.i},{check.j}): {check.residual}"
                )
    rng = np.random.default_rng(607)
    non_ybe = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    if check_yang_baxter(non_ybe, 2).passed:
        problems.append("probe operator unexpectedly satisfies the YBE")
    far = [
        c
        for c in check_braid_relations(non_ybe, 2, 4, TIGHT_TOL).checks
        if c.kind == "far_commutation"
    ]
    if not far or not all(c.passed for c in far):
        problems.append("far commutation failed for the non-YBE operator")
    _report(6, "braid relations", problems)


def test_criterion_07_oracle_equivalence():
    problems = []
    rng = np.random.default_rng(707)
    dims_cycle = [
        (2, 2), (3, 3), (2, 2, 2), (2, 3), (3, 2), (2, 2, 3), (2, 3, 3), (3, 3, 3),
    ]
    boundary = 0
    for i in range(1000):
        dims = dims_cycle[i % len(dims_cycle)]
        if i % 2:
            tensor = _random_tensor(dims, rng)
        else:
            tensor = segre_map(
                [rng.normal(size=d) + 1j * rng.normal(size=d) for d in dims]
            )
        verdict = is_fully_separable(tensor, SEP_TOL)
        if BOUNDARY_LOW < verdict.max_violation < BOUNDARY_HIGH:
            boundary += 1
            continue
        if verdict.separable != rank1_oracle(tensor, SEP_TOL):
            problems.append(f"case {i} dims {dims}: verdicts disagree")
    print(f"  (oracle equivalence: {1000 - boundary} compared, {boundary} at boundary)")
    _report(7, "quadric vs rank-1 oracle equivalence", problems)


def test_criterion_08_convention_divergence_witness():
    problems = []
    tensor = segre_map([(1, 1, 2), (1, 1, 1)])
    paper = certify_entangler(tensor, "paper-matrix", separability_tol=SEP_TOL)
    if not paper.coefficient_verdict.separable:
        problems.append("paper-matrix: coefficients flagged entangled")
    if paper.entangling.separable:
        problems.append("paper-matrix: output flagged separable")
    if paper.entangling.witness is None:
        problems.append("paper-matrix: no witness reported")
    if paper.entangling.max_violation != 0.5:
        problems.append(f"max violation {paper.entangling.max_violation} != 0.5")
    out = apply_entangler(tensor, "paper-matrix").to_tensor()
    named = QuadricGenerator(1, (1, 1), (2, 2), (3, 3))
    raw = evaluate_quadric(named, out)
    if raw != -1.0:
        problems.append(f"named minor on raw output {raw} != -1")
    normalized = CoefficientTensor(
        out.dims, out.entries / np.max(np.abs(out.entries))
    )
    scaled = evaluate_quadric(named, normalized)
    if scaled != -0.25:
        problems.append(f"named minor after normalization {scaled} != -0.25")
    theorem = certify_entangler(tensor, "theorem", separability_tol=SEP_TOL)
    if not (theorem.coefficient_verdict.separable and theorem.entangling.separable):
        problems.append("theorem convention: verdicts not both separable")
    _report(8, "convention-divergence witness", problems)


def test_criterion_09_generator_counts():
    """Pinned counts (1, 18, 12); the (3,3) value is unattainable, see module docstring."""
    problems = []
    expected = {(2, 2): 1, (3, 3): 18, (2, 2, 2): 12}
    for dims, count in expected.items():
        observed = len(quadric_generators(dims))
        if observed != count:
            problems.append(f"dims {dims}: {observed} generators, pinned {count}")
    _report(9, "generator counts", problems)


def test_criterion_10_scale_invariance():
    problems = []
    rng = np.random.default_rng(1010)
    dims_cycle = [(2, 2), (3, 3), (2, 2, 2), (3, 3, 3)]
    for i in range(100):
        dims = dims_cycle[i % len(dims_cycle)]
        tensor = _random_tensor(dims, rng)
        base = is_fully_separable(tensor, SEP_TOL)
        for lam in (2.0, 1j, 1e-6):
            scaled = is_fully_separable(
                CoefficientTensor(dims, lam * tensor.entries), SEP_TOL
            )
            if scaled.separable != base.separable:
                problems.append(f"case {i} lambda {lam}: flag changed")
            if lam in (2.0, 1j):
                identical = scaled.max_violation == base.max_violation
            else:
                identical = abs(scaled.max_violation - base.max_violation) <= (
                    1e-12 * base.max_violation + 1e-15
                )
            if not identical:
                problems.append(
                    f"case {i} lambda {lam}: violation {scaled.max_violation} "
                    f"vs {base.max_violation}"
                )
    _report(10, "scale invariance", problems)


def test_criterion_11_unitarity_criterion():
    problems = []
    rng = np.random.default_rng(1111)
    dims_cycle = [(2, 2), (3, 3), (2, 2, 2), (3, 3, 3)]
    for i in range(100):
        dims = dims_cycle[i % len(dims_cycle)]
        if i % 2:
            tensor = random_phases(dims, 1100 + i)
        else:
            tensor = _random_tensor(dims, rng)
        unimodular = bool(np.max(np.abs(np.abs(tensor.entries) - 1.0)) <= TIGHT_TOL)
        report = certify_entangler(tensor, "theorem", unitary_tol=TIGHT_TOL)
        if report.unitary != unimodular:
            problems.append(
                f"case {i}: unitary={report.unitary} but unimodular={unimodular}"
            )
    _report(11, "unitarity iff unimodular coefficients", problems)
