"""Exhaustive ground truth: enumerate non-backtracking tail-less closed
cycles edge by edge, classify them by rotation and period, and emit the
induced necklace coloring words.

A length-N edge sequence is a cycle when every cyclically consecutive pair
(i, j) satisfies end(i) = origin(j) with j different from the inverse of i;
between positions 1..N-1 that is the non-backtracking condition, and at the
seam it is tail-lessness. Both conditions are rotation-stable, so rotation
classes are well defined. A cycle and its inverse stay distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .config import DEFAULT_LIMITS
from .errors import CapExceeded
from .graphs import SymmetrizedGraph


@dataclass(frozen=True)
class Cycle:
    """One closed non-backtracking tail-less edge sequence."""

    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class CycleClass:
    """Rotation class: lexicographically least rotation, number of distinct
    rotations, and the repetition period r (non-periodic iff r = 1)."""

    representative: tuple[int, ...]
    size: int
    period: int

    @property
    def nonperiodic(self) -> bool:
        return self.period == 1


@dataclass(frozen=True)
class NecklaceClass:
    """Coloring word induced by a non-periodic class: oriented edge i wears
    color i+1, written c1..c(2|E|)."""

    colors: tuple[int, ...]
    word: str


def successor_lists(sg: SymmetrizedGraph) -> tuple[tuple[int, ...], ...]:
    """For each oriented edge, the ascending list of edges allowed to follow."""
    dim = sg.oriented_edge_count
    return tuple(
        tuple(j for j in range(dim) if sg.ends[i] == sg.origins[j] and j != sg.inverse(i))
        for i in range(dim)
    )


def is_valid_cycle(sg: SymmetrizedGraph, edges: tuple[int, ...]) -> bool:
    """Re-verify the three defining conditions directly from the graph."""
    n = len(edges)
    if n < 1:
        return False
    for k in range(n):
        if sg.ends[edges[k]] != sg.origins[edges[(k + 1) % n]]:
            return False
    for k in range(n - 1):
        if edges[k + 1] == sg.inverse(edges[k]):
            return False
    return edges[0] != sg.inverse(edges[n - 1])


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"cycle length must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"cycle length {n} exceeds the enumeration cap {cap}")


def _raw_cycles(sg: SymmetrizedGraph, n: int) -> Iterator[tuple[int, ...]]:
    succ = successor_lists(sg)
    dim = sg.oriented_edge_count
    path: list[int] = []

    def extend(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == n:
            # Seam check: closure and tail-lessness together say the first
            # edge is an allowed successor of the last.
            if path[0] in succ[path[-1]]:
                yield tuple(path)
            return
        for j in succ[path[-1]]:
            path.append(j)
            yield from extend(depth + 1)
            path.pop()

    for first in range(dim):
        path.append(first)
        yield from extend(1)
        path.pop()


def enumerate_cycles(
    sg: SymmetrizedGraph, n: int, cap: int = DEFAULT_LIMITS.max_cycle_length
) -> Iterator[Cycle]:
    """Stream every length-n cycle exactly once, in lexicographic order.

    The total count equals the trace of the n-th power of the edge matrix.
    """
    _check_cap(n, cap)
    for edges in _raw_cycles(sg, n):
        yield Cycle(edges)


def _min_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    doubled = seq + seq
    n = len(seq)
    return min(doubled[k : k + n] for k in range(n))


def _block_length(seq: tuple[int, ...]) -> int:
    """Smallest d with d | n such that rotating by d fixes seq; the number of
    distinct rotations. The repetition period is n // d."""
    n = len(seq)
    for d in range(1, n + 1):
        if n % d == 0 and seq == seq[d:] + seq[:d]:
            return d
    raise AssertionError("unreachable: d = n always fixes seq")


def rotation_classes(cycles: Iterable[Cycle], n: int) -> tuple[CycleClass, ...]:
    """Partition a complete length-n cycle set into rotation classes, sorted
    by representative. Inverse cycles are never merged."""
    groups: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
    for cycle in cycles:
        if cycle.length != n:
            raise ValueError(f"expected cycles of length {n}, got {cycle.length}")
        groups.setdefault(_min_rotation(cycle.edges), set()).add(cycle.edges)
    out = []
    for rep in sorted(groups):
        members = groups[rep]
        d = _block_length(rep)
        if len(members) != d:
            raise ValueError(
                f"incomplete input: class {rep} has {len(members)} members, expected {d}"
            )
        out.append(CycleClass(rep, d, n // d))
    return tuple(out)


def count_nonperiodic_classes(
    sg: SymmetrizedGraph, n: int, cap: int = DEFAULT_LIMITS.max_cycle_length
) -> int:
    """Count rotation classes of non-periodic length-n cycles by streaming:
    a class is counted at its lexicographically least, aperiodic member."""
    _check_cap(n, cap)
    count = 0
    for edges in _raw_cycles(sg, n):
        if edges == _min_rotation(edges) and _block_length(edges) == n:
            count += 1
    return count


def necklace_classes(
    sg: SymmetrizedGraph, n: int, cap: int = DEFAULT_LIMITS.max_cycle_length
) -> tuple[NecklaceClass, ...]:
    """One coloring word per non-periodic rotation class, in representative
    order. The count equals the Moebius class-count formula."""
    _check_cap(n, cap)
    out = []
    for cls in rotation_classes(enumerate_cycles(sg, n, cap), n):
        if cls.nonperiodic:
            colors = tuple(i + 1 for i in cls.representative)
            out.append(NecklaceClass(colors, " ".join(f"c{c}" for c in colors)))
    return tuple(out)
