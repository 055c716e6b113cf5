"""Acceptance suite: every release criterion, one test each, exact tolerances.

Each test prints one `criterion NN PASS/FAIL` line (visible with `pytest -s`).
All arithmetic is exact, so comparisons are equalities unless a runtime bound
is part of the criterion.
"""

import json
import time
from contextlib import contextmanager
from itertools import product as iproduct

from wittcycles import (
    IntMatrix,
    SuperDims,
    build_edge_matrix,
    classical_necklace_count,
    coefficients_from_traces,
    corpus_graphs,
    count_nonperiodic_classes,
    cycle_class_count,
    det_poly_direct,
    det_poly_from_traces,
    enumerate_cycles,
    graded_lie_dimension,
    kronecker,
    mat_pow,
    product_power,
    rose,
    series_inverse,
    symmetrize,
    theta,
    trace_powers,
    traces_from_coefficients,
    write_corpus,
)
from wittcycles.cli import main
from wittcycles.series import TruncSeries
from wittcycles.witt import (
    class_kron_pair_sides,
    class_mixed_powers_sides,
    class_power_sides,
    s_kron_multi_sides,
    s_kron_pair_sides,
    s_mixed_powers_sides,
    s_power_sides,
)

ORDER = 12


@contextmanager
def criterion(num, description):
    try:
        yield
    except BaseException:
        print(f"criterion {num:2d} FAIL  {description}")
        raise
    print(f"criterion {num:2d} PASS  {description}")


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_criterion_01_rose_closed_forms():
    with criterion(1, "rose graphs: closed-form traces and determinant, R=2..5, <1s"):
        start = time.perf_counter()
        for r in range(2, 6):
            t = build_edge_matrix(symmetrize(rose(r)))
            traces = trace_powers(t, ORDER)
            expected = tuple(
                1 + (r - 1) * (1 + (-1) ** n) + (2 * r - 1) ** n for n in range(1, ORDER + 1)
            )
            assert traces == expected
            det_expected = poly_mul([1, -1], [1, -(2 * r - 1)])
            for _ in range(r - 1):
                det_expected = poly_mul(det_expected, [1, 0, -1])
            assert list(det_poly_from_traces(traces, t.dim).coefficients) == det_expected
            assert list(det_poly_direct(t).coefficients) == det_expected
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_02_theta_values():
    with criterion(2, "theta graph: traces, determinant, class counts, exact"):
        t = build_edge_matrix(symmetrize(theta()))
        traces = trace_powers(t, ORDER)
        assert traces == tuple(
            0 if n % 2 else 4 + 2 * 2**n for n in range(1, ORDER + 1)
        )
        assert det_poly_from_traces(traces, 6).coefficients == (1, 0, -6, 0, 9, 0, -4)
        assert det_poly_direct(t).coefficients == (1, 0, -6, 0, 9, 0, -4)
        assert cycle_class_count(2, traces) == 6
        assert cycle_class_count(4, traces) == 6
        assert all(cycle_class_count(n, traces) == 0 for n in range(1, ORDER + 1, 2))


def test_criterion_03_rose3_necklace_catalog(tmp_path, capsys):
    with criterion(3, "rose(3): 40 classes at N=3; necklace words split 24 + 16"):
        traces = trace_powers(build_edge_matrix(symmetrize(rose(3))), 3)
        assert cycle_class_count(3, traces) == 40

        write_corpus(tmp_path)
        code = main(["necklace", str(tmp_path / "rose3.json"), "3"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 0
        words = doc["words"]
        assert len(words) == 40
        split = {2: 0, 3: 0}
        for word in words:
            colors = word.split()
            assert len(colors) == 3
            split[len(set(colors))] += 1
        assert split == {2: 24, 3: 16}


def test_criterion_04_oracle_equivalence():
    with criterion(4, "enumeration matches traces and class counts, N=1..8, <30s"):
        start = time.perf_counter()
        for name, g in corpus_graphs().items():
            sg = symmetrize(g)
            traces = trace_powers(build_edge_matrix(sg), 8)
            for n in range(1, 9):
                enumerated = sum(1 for _ in enumerate_cycles(sg, n))
                assert enumerated == traces[n - 1], (name, n)
                assert count_nonperiodic_classes(sg, n) == cycle_class_count(n, traces), (
                    name,
                    n,
                )
        elapsed = time.perf_counter() - start
        assert elapsed < 30.0, f"took {elapsed:.3f}s"


def test_criterion_05_product_identity():
    with criterion(5, "prod (1-z^N)^count = det(1-zT) to z^12; classical case R=1..4"):
        for name, g in corpus_graphs().items():
            t = build_edge_matrix(symmetrize(g))
            traces = trace_powers(t, max(ORDER, t.dim))
            counts = [cycle_class_count(n, traces) for n in range(1, ORDER + 1)]
            det = det_poly_from_traces(traces, t.dim)
            assert product_power(counts, "plus").integer_coefficients() == tuple(
                det.coefficient(i) for i in range(ORDER + 1)
            ), name
        for r in range(1, 5):
            counts = [classical_necklace_count(n, r) for n in range(1, ORDER + 1)]
            expected = (1, -r) + (0,) * (ORDER - 1)
            assert product_power(counts, "plus").integer_coefficients() == expected, r


def test_criterion_06_zeta_triple_agreement():
    with criterion(6, "zeta by inversion = product = 1 + sum c_-; theta closed form"):
        for name, g in corpus_graphs().items():
            t = build_edge_matrix(symmetrize(g))
            traces = trace_powers(t, max(ORDER, t.dim))
            counts = [cycle_class_count(n, traces) for n in range(1, ORDER + 1)]
            det = det_poly_from_traces(traces, t.dim)
            zeta = series_inverse(TruncSeries.from_coefficients(det.coefficients, ORDER))
            zeta_ints = zeta.integer_coefficients()
            assert product_power(counts, "minus").integer_coefficients() == zeta_ints, name
            c_minus = coefficients_from_traces(traces, "minus", ORDER)
            assert zeta_ints[1:] == c_minus, name
            assert all(c >= 0 for c in c_minus), name
        theta_minus = coefficients_from_traces(
            trace_powers(build_edge_matrix(symmetrize(theta())), ORDER), "minus", ORDER
        )
        for n in range(1, 7):
            value = 2 ** (2 * n + 5) - 6 * n - 14
            assert value % 18 == 0
            assert theta_minus[2 * n - 1] == value // 18


def test_criterion_07_coefficient_trace_round_trip():
    with criterion(7, "traces -> coefficients -> traces is the identity to order 12"):
        for name, g in corpus_graphs().items():
            t = build_edge_matrix(symmetrize(g))
            traces = trace_powers(t, ORDER)
            for sign in ("plus", "minus"):
                coeffs = coefficients_from_traces(traces, sign, ORDER)
                assert traces_from_coefficients(coeffs, sign, ORDER) == traces, (name, sign)


def test_criterion_08_identity_suite_grid():
    with criterion(8, "convolution identity suite on the full pool grid + mutation"):
        pool = {
            "rose2": build_edge_matrix(symmetrize(rose(2))),
            "theta": build_edge_matrix(symmetrize(theta())),
            "unit": IntMatrix.from_rows([[1]]),
            "allones2": IntMatrix.from_rows([[1, 1], [1, 1]]),
        }
        deep = {name: trace_powers(t, 32) for name, t in pool.items()}
        n_max, l_values, rs_values = 8, (1, 2, 3), ((1, 2), (2, 3), (3, 4))

        for (na, ta), (nb, tb) in iproduct(pool.items(), pool.items()):
            trk = trace_powers(kronecker(ta, tb), n_max)
            for n in range(1, n_max + 1):
                conv, comp, _ = s_kron_pair_sides(deep[na], deep[nb], trk, n)
                assert conv == comp, ("s-kron", na, nb, n)
                conv, comp, _ = class_kron_pair_sides(deep[na], deep[nb], trk, n)
                assert conv == comp, ("class-kron", na, nb, n)

        for name, t in pool.items():
            for l in l_values:
                tr_power = trace_powers(mat_pow(t, l), n_max)
                for n in range(1, n_max + 1):
                    conv, comp, _ = s_power_sides(tr_power, deep[name], l, n)
                    assert conv == comp, ("s-power", name, l, n)
                    conv, comp, _ = class_power_sides(tr_power, deep[name], l, n)
                    assert conv == comp, ("class-power", name, l, n)

        triples = [
            combo
            for combo in iproduct(pool.items(), repeat=3)
            if combo[0][1].dim * combo[1][1].dim * combo[2][1].dim <= 64
        ]
        assert len(triples) >= 50  # the cap excludes only a few oversized triples
        for (na, ta), (nb, tb), (nc, tc) in triples:
            trk = trace_powers(kronecker(kronecker(ta, tb), tc), n_max)
            for n in range(1, n_max + 1):
                conv, comp, _ = s_kron_multi_sides((deep[na], deep[nb], deep[nc]), trk, n)
                assert conv == comp, ("s-kron-multi", na, nb, nc, n)

        for (na, ta), (nb, tb) in iproduct(pool.items(), pool.items()):
            for r, s in rs_values:
                mixed = trace_powers(kronecker(mat_pow(ta, s), mat_pow(tb, r)), n_max)
                for n in range(1, n_max + 1):
                    conv, comp, _ = s_mixed_powers_sides(
                        deep[na], deep[nb], mixed, r, s, n
                    )
                    assert conv == comp, ("s-mixed", na, nb, r, s, n)
                    conv, comp, _ = class_mixed_powers_sides(
                        deep[na], deep[nb], mixed, r, s, n
                    )
                    assert conv == comp, ("class-mixed", na, nb, r, s, n)

        # Mutation control: one corrupted trace must break the pair identity.
        mutated = list(deep["rose2"])
        mutated[3] += 1
        trk = trace_powers(kronecker(pool["rose2"], pool["theta"]), n_max)
        conv, comp, _ = s_kron_pair_sides(mutated, deep["theta"], trk, 4)
        assert conv != comp, "mutation control failed: checks are vacuous"


def test_criterion_09_dimension_pipeline():
    with criterion(9, "partition-sum Lie dimensions reproduce class counts to N=12"):
        for name, g in corpus_graphs().items():
            t = build_edge_matrix(symmetrize(g))
            traces = trace_powers(t, max(ORDER, t.dim))
            dims = SuperDims.from_det_polynomial(det_poly_from_traces(traces, t.dim))
            for n in range(1, ORDER + 1):
                assert graded_lie_dimension(dims, n) == cycle_class_count(n, traces), (
                    name,
                    n,
                )


def test_criterion_10_documented_discrepancy():
    with criterion(10, "rose(2) enveloping dims start 4, 14, 44 (series inversion)"):
        t = build_edge_matrix(symmetrize(rose(2)))
        det = det_poly_from_traces(trace_powers(t, 4), 4)
        zeta = series_inverse(TruncSeries.from_coefficients(det.coefficients, ORDER))
        dims = zeta.integer_coefficients()[1:]
        assert dims[:3] == (4, 14, 44)
        # Independent route: partial fractions of 1/((1-z)^2 (1+z) (1-3z))
        # give (27*3^n + (-1)^n - 4n - 12)/16.
        for n in range(1, ORDER + 1):
            value = 27 * 3**n + (-1) ** n - 4 * n - 12
            assert value % 16 == 0
            assert dims[n - 1] == value // 16
        # A closed form in circulation gives 5, 19, 62, ... instead; the exact
        # computation rejects it from n = 1 on (see README).
        divergent = ((-1) ** 1 + 39 * 3 - 24 - 12) // 16
        assert divergent == 5 and dims[0] == 4
