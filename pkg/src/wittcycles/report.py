"""Full per-graph report: traces, class counts, determinant and zeta
coefficients, and the graded dimension data, cross-checked on construction.

Every quantity is computed by at least two independent routes before the
document is returned, so a report that exists is internally consistent;
inconsistency raises instead of emitting bad numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .config import DEFAULT_ORDER
from .errors import ExactnessError
from .graphs import OrientedGraph, build_edge_matrix, check_connected, symmetrize
from .matrices import det_poly_from_traces, trace_powers
from .series import TruncSeries, product_power, series_inverse
from .witt import (
    SuperDims,
    coefficients_from_traces,
    cycle_class_count,
    cycle_class_table,
    graded_lie_dimension,
    traces_from_coefficients,
)


@dataclass(frozen=True)
class ReportDocument:
    """Everything the report command emits, with deterministic field order."""

    vertex_count: int
    edge_count: int
    connected: bool
    warnings: tuple[str, ...]
    order: int
    traces: tuple[int, ...]
    class_counts: tuple[int, ...]
    det_coefficients: tuple[int, ...]
    zeta_coefficients: tuple[int, ...]
    lie_dims: tuple[int, ...]
    enveloping_dims: tuple[int, ...]

    def to_json_dict(self) -> dict[str, Any]:
        """JSON-ready dict; integer payloads become decimal strings so that
        arbitrarily large values survive any consumer."""
        return {
            "graph": {
                "vertices": self.vertex_count,
                "edges": self.edge_count,
                "connected": self.connected,
                "warnings": list(self.warnings),
            },
            "order": self.order,
            "traces": [str(v) for v in self.traces],
            "class_counts": [str(v) for v in self.class_counts],
            "det_coefficients": [str(v) for v in self.det_coefficients],
            "zeta_coefficients": [str(v) for v in self.zeta_coefficients],
            "lie_dims": [str(v) for v in self.lie_dims],
            "enveloping_dims": [str(v) for v in self.enveloping_dims],
        }


def _cross_checked_counts(traces: tuple[int, ...], order: int) -> tuple[int, ...]:
    table = cycle_class_table(order, traces)
    direct = tuple(cycle_class_count(n, traces) for n in range(1, order + 1))
    if table.counts != direct:
        raise ExactnessError("class-count recurrence disagrees with Moebius inversion")
    return direct


def build_report(g: OrientedGraph, order: int = DEFAULT_ORDER) -> ReportDocument:
    """Compute the full report for one graph at truncation order K = order."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    warnings = []
    connected = check_connected(g)
    if not connected:
        warnings.append(
            "graph is not connected; all quantities are still well defined per component"
        )
    sg = symmetrize(g)
    t = build_edge_matrix(sg)
    dim = t.dim
    traces = trace_powers(t, max(order, dim))

    counts = _cross_checked_counts(traces, order)
    det = det_poly_from_traces(traces, dim)

    # Determinant route vs the coefficient partition sum (exact match required).
    c_plus = coefficients_from_traces(traces, "plus", order)
    if c_plus != det.negated_tail(order):
        raise ExactnessError("partition-sum coefficients disagree with the determinant")

    # Zeta coefficients three ways: series inverse of det, the product over
    # class counts, and the 'minus' partition sum.
    det_series = TruncSeries.from_coefficients(det.coefficients, order)
    zeta = series_inverse(det_series)
    via_product = product_power(counts, "minus")
    c_minus = coefficients_from_traces(traces, "minus", order)
    zeta_ints = zeta.integer_coefficients()
    if via_product.integer_coefficients() != zeta_ints or zeta_ints[1:] != c_minus:
        raise ExactnessError("zeta series routes disagree")
    if product_power(counts, "plus").integer_coefficients() != tuple(
        det.coefficient(i) for i in range(order + 1)
    ):
        raise ExactnessError("class-count product disagrees with the determinant")

    # Graded Lie dimensions from the generator superdimensions t(i) = -a_i
    # must reproduce the class counts, and the trace round-trip must close.
    dims = SuperDims.from_det_polynomial(det)
    lie = tuple(graded_lie_dimension(dims, n) for n in range(1, order + 1))
    if lie != counts:
        raise ExactnessError("graded Lie dimensions disagree with class counts")
    if traces_from_coefficients(c_plus, "plus", order) != tuple(traces[:order]):
        raise ExactnessError("coefficient/trace round-trip failed")

    return ReportDocument(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        connected=connected,
        warnings=tuple(warnings),
        order=order,
        traces=tuple(traces[:order]),
        class_counts=counts,
        det_coefficients=det.coefficients,
        zeta_coefficients=zeta_ints,
        lie_dims=lie,
        enveloping_dims=tuple(zeta_ints[1:]),
    )
