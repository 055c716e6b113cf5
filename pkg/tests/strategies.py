"""Hypothesis strategies shared by the test modules."""

import hypothesis.strategies as st

from wittcycles import IntMatrix, OrientedGraph


@st.composite
def oriented_graphs(draw, max_vertices=3, max_edges=3):
    v = draw(st.integers(1, max_vertices))
    m = draw(st.integers(1, max_edges))
    edges = tuple(
        (draw(st.integers(0, v - 1)), draw(st.integers(0, v - 1))) for _ in range(m)
    )
    return OrientedGraph(v, edges)


@st.composite
def binary_matrices(draw, max_dim=3):
    dim = draw(st.integers(1, max_dim))
    rows = [[draw(st.integers(0, 1)) for _ in range(dim)] for _ in range(dim)]
    return IntMatrix.from_rows(rows)


@st.composite
def paired_binary_matrices(draw, max_half=4):
    """0/1 matrices of even dimension with the edge-matrix zero pattern:
    entry (i, inverse(i)) = 0 for the pairing i <-> i + dim/2."""
    half = draw(st.integers(1, max_half))
    dim = 2 * half
    rows = [[draw(st.integers(0, 1)) for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        rows[i][(i + half) % dim] = 0
    return IntMatrix.from_rows(rows)
