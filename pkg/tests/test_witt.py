from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import binary_matrices
from wittcycles import (
    ExactnessError,
    IntMatrix,
    SuperDims,
    classical_necklace_count,
    coefficients_from_traces,
    cycle_class_count,
    cycle_class_table,
    det_poly_from_traces,
    enveloping_dimensions,
    graded_lie_dimension,
    mobius_trace_sum,
    trace_powers,
    traces_from_coefficients,
    witt_partition_value,
)

M_TABLE_R2 = (2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335)


def brute_nonperiodic_necklaces(n, r):
    """Count length-n words over r colors that are lexicographically least
    among their rotations and have no smaller repetition period."""
    count = 0
    for w in product(range(r), repeat=n):
        rots = {w[k:] + w[:k] for k in range(n)}
        if len(rots) == n and min(rots) == w:
            count += 1
    return count


def test_class_count_rose3(corpus_traces):
    assert cycle_class_count(3, corpus_traces["rose3"]) == 40


def test_class_count_theta(corpus_traces):
    traces = corpus_traces["theta"]
    assert cycle_class_count(2, traces) == 6
    assert cycle_class_count(4, traces) == 6
    assert all(cycle_class_count(n, traces) == 0 for n in range(1, 24, 2))


def test_class_count_length_one_is_trace(corpus_traces):
    for traces in corpus_traces.values():
        assert cycle_class_count(1, traces) == traces[0]


def test_class_count_rejects_corrupt_traces():
    with pytest.raises(ExactnessError):
        cycle_class_count(2, [1, 2])  # (2 - 1) not divisible by 2


def test_table_matches_direct_inversion(corpus_traces):
    for traces in corpus_traces.values():
        table = cycle_class_table(24, traces)
        assert table.counts == tuple(cycle_class_count(n, traces) for n in range(1, 25))


def test_table_rose2(corpus_traces):
    assert cycle_class_table(4, corpus_traces["rose2"]).counts == (4, 4, 8, 18)


def test_table_theta(corpus_traces):
    assert cycle_class_table(4, corpus_traces["theta"]).counts == (0, 6, 0, 6)


def test_table_k1(corpus_traces):
    traces = corpus_traces["loop"]
    table = cycle_class_table(1, traces)
    assert table.counts == (traces[0],)


def test_table_accessors_and_optional_envelope(corpus_traces):
    traces = corpus_traces["theta"]
    bare = cycle_class_table(4, traces)
    assert bare.enveloping_dims is None
    assert (bare.trace(2), bare.count(2), bare.k_max) == (12, 6, 4)
    from wittcycles import CycleClassTable

    full = CycleClassTable(bare.traces, bare.counts, (0, 6, 0, 27))
    assert full.enveloping_dims == (0, 6, 0, 27)


def test_counts_nonnegative_and_divisor_identity(corpus_traces):
    for traces in corpus_traces.values():
        table = cycle_class_table(24, traces)
        assert all(c >= 0 for c in table.counts)
        for n in range(1, 25):
            total = sum(g * table.count(g) for g in range(1, n + 1) if n % g == 0)
            assert total == traces[n - 1]


def test_classical_necklace_small():
    assert classical_necklace_count(2, 2) == 1
    assert classical_necklace_count(6, 2) == 9
    assert tuple(classical_necklace_count(n, 2) for n in range(1, 13)) == M_TABLE_R2


@given(st.integers(0, 30))
def test_classical_necklace_degree_one(r):
    assert classical_necklace_count(1, r) == r


def test_classical_necklace_matches_brute_force():
    for r in (2, 3):
        for n in range(1, 9):
            assert classical_necklace_count(n, r) == brute_nonperiodic_necklaces(n, r)


def test_classical_necklace_equals_all_ones_matrix_route():
    for r in range(1, 5):
        q = IntMatrix.from_rows([[1] * r] * r)
        traces = trace_powers(q, 12)
        for n in range(1, 13):
            assert classical_necklace_count(n, r) == cycle_class_count(n, traces)


def test_mobius_trace_sum_basics(corpus_traces):
    traces = corpus_traces["rose3"]
    assert mobius_trace_sum(1, traces) == traces[0]
    assert mobius_trace_sum(3, traces) == 120
    ones = [1] * 12
    assert all(mobius_trace_sum(n, ones) == 0 for n in range(2, 13))


@given(st.integers(1, 20))
def test_mobius_trace_sum_is_n_times_count(n):
    traces = [2 + (-1) ** k + 3**k for k in range(1, 21)]
    assert mobius_trace_sum(n, traces) == n * cycle_class_count(n, traces)


def test_coefficients_rose2(corpus_traces):
    got = coefficients_from_traces(corpus_traces["rose2"], "plus", 8)
    assert got == (4, -2, -4, 3, 0, 0, 0, 0)


def test_coefficients_theta(corpus_traces):
    assert coefficients_from_traces(corpus_traces["theta"], "plus", 6) == (0, 6, 0, -9, 0, 4)
    minus = coefficients_from_traces(corpus_traces["theta"], "minus", 4)
    assert minus[1] == 6


def test_coefficients_match_det_and_are_nonneg(corpus_traces, corpus_matrices):
    for name, t in corpus_matrices.items():
        traces = corpus_traces[name]
        det = det_poly_from_traces(traces, t.dim)
        assert coefficients_from_traces(traces, "plus", 12) == det.negated_tail(12)
        assert all(c >= 0 for c in coefficients_from_traces(traces, "minus", 12))


def test_coefficients_vanish_beyond_dimension(corpus_traces, corpus_matrices):
    for name, t in corpus_matrices.items():
        c_plus = coefficients_from_traces(corpus_traces[name], "plus", t.dim + 4)
        assert all(c == 0 for c in c_plus[t.dim :])


def test_traces_from_coefficients_hand_values():
    c_plus = (4, -2, -4, 3)
    got = traces_from_coefficients(c_plus, "plus", 2)
    assert got == (4, 12)  # N=2: 2 * ((4*4 - 2)/2 + ... ) collapses to 2*(8-2)


def test_traces_from_coefficients_theta_odd_vanish(corpus_traces):
    c_plus = coefficients_from_traces(corpus_traces["theta"], "plus", 6)
    assert traces_from_coefficients(c_plus, "plus", 3)[2] == 0


@given(st.integers(1, 9), st.integers(1, 8))
def test_traces_from_single_coefficient_geometric(r, k_max):
    assert traces_from_coefficients((r,), "plus", k_max) == tuple(
        r**n for n in range(1, k_max + 1)
    )


def test_round_trip_both_signs(corpus_traces):
    for traces in corpus_traces.values():
        head = tuple(traces[:12])
        for sign in ("plus", "minus"):
            coeffs = coefficients_from_traces(traces, sign, 12)
            assert traces_from_coefficients(coeffs, sign, 12) == head


def test_traces_beyond_support_reconstruct(corpus_traces, corpus_matrices):
    # The finite det coefficients determine every higher trace.
    for name, t in corpus_matrices.items():
        c_plus = coefficients_from_traces(corpus_traces[name], "plus", t.dim)
        assert traces_from_coefficients(c_plus, "plus", 16) == trace_powers(t, 16)


@settings(max_examples=40)
@given(binary_matrices(max_dim=4), st.sampled_from(["plus", "minus"]))
def test_round_trip_random_matrices(m, sign):
    traces = trace_powers(m, 10)
    coeffs = coefficients_from_traces(traces, sign, 10)
    assert traces_from_coefficients(coeffs, sign, 10) == traces


def test_witt_partition_values(corpus_traces):
    dims = SuperDims((4, -2, -4, 3))
    assert witt_partition_value(dims, 1) == 4
    assert witt_partition_value(dims, 2) == 6  # t(2) + t(1)^2/2 = -2 + 8


@given(st.integers(-4, 4), st.integers(1, 8))
def test_witt_partition_single_grade(r, n):
    assert witt_partition_value(SuperDims((r,)), n) == Fraction(r**n, n)


def test_witt_partition_zero_dims():
    assert witt_partition_value(SuperDims((0, 0)), 3) == 0
    assert witt_partition_value(SuperDims(()), 3) == 0


def test_graded_lie_dims_reproduce_class_counts(corpus_traces, corpus_matrices):
    for name, t in corpus_matrices.items():
        traces = corpus_traces[name]
        det = det_poly_from_traces(traces, t.dim)
        dims = SuperDims.from_det_polynomial(det)
        for n in range(1, 13):
            assert graded_lie_dimension(dims, n) == cycle_class_count(n, traces)


def test_graded_lie_dims_single_grade_is_necklace_polynomial():
    dims = SuperDims((2,))
    for n in range(1, 9):
        assert graded_lie_dimension(dims, n) == classical_necklace_count(n, 2)


def test_graded_lie_dim_theta_degree3(corpus_traces):
    det = det_poly_from_traces(corpus_traces["theta"], 6)
    assert graded_lie_dimension(SuperDims.from_det_polynomial(det), 3) == 0


def test_enveloping_dims_theta(corpus_traces):
    det = det_poly_from_traces(corpus_traces["theta"], 6)
    dims = enveloping_dimensions(SuperDims.from_det_polynomial(det), 12)
    assert dims == (0, 6, 0, 27, 0, 112, 0, 453, 0, 1818, 0, 7279)
    for n in range(1, 7):
        assert dims[2 * n - 1] == (2 ** (2 * n + 5) - 6 * n - 14) // 18


def test_enveloping_dims_rose2(corpus_traces):
    det = det_poly_from_traces(corpus_traces["rose2"], 4)
    assert enveloping_dimensions(SuperDims.from_det_polynomial(det), 3) == (4, 14, 44)


def test_enveloping_dims_geometric():
    assert enveloping_dimensions(SuperDims((1,)), 6) == (1,) * 6


def test_enveloping_dims_negative_superdimensions():
    # 1/(1+z) alternates; negative entries are legitimate superdimensions.
    assert enveloping_dimensions(SuperDims((-1,)), 5) == (-1, 1, -1, 1, -1)


def test_super_dims_accessors():
    dims = SuperDims((4, -2))
    assert dims.at(1) == 4 and dims.at(2) == -2 and dims.at(7) == 0
    assert dims.support_bound == 2
    with pytest.raises(ValueError):
        dims.at(0)
