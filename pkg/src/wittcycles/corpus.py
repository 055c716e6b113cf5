"""Reference graphs used across the test suite and shipped as data files.

The rose graphs (r loops on one vertex) and the theta graph (two vertices
joined by three parallel edges) have closed-form traces and determinants,
which makes them the regression workhorses; the single loop and the
path-with-loop cover degenerate shapes (fixed-point-free pairing on a
2-cycle, and an oriented edge with no admissible successor).
"""

from __future__ import annotations

from pathlib import Path

from .graphs import OrientedGraph, dump_graph


def rose(r: int) -> OrientedGraph:
    """r oriented loops hooked to a single vertex."""
    if r < 1:
        raise ValueError(f"rose graph needs r >= 1 loops, got {r}")
    return OrientedGraph(1, ((0, 0),) * r)


def theta() -> OrientedGraph:
    """Two vertices joined by three parallel oriented edges."""
    return OrientedGraph(2, ((0, 1), (0, 1), (0, 1)))


def single_loop() -> OrientedGraph:
    return rose(1)


def path_with_loop() -> OrientedGraph:
    """One edge into a vertex carrying a loop; edge 0 reversed has no
    admissible successor, so its edge-matrix row is zero."""
    return OrientedGraph(2, ((0, 1), (1, 1)))


def corpus_graphs() -> dict[str, OrientedGraph]:
    """The five standard corpus graphs keyed by their file stem."""
    return {
        "rose2": rose(2),
        "rose3": rose(3),
        "theta": theta(),
        "loop": single_loop(),
        "path_loop": path_with_loop(),
    }


def write_corpus(directory: str | Path) -> list[Path]:
    """Write every corpus graph as <name>.json under directory; returns paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, graph in corpus_graphs().items():
        path = directory / f"{name}.json"
        dump_graph(graph, path)
        paths.append(path)
    return paths
