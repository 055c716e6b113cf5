#!/usr/bin/env python3
"""Time the brute-force enumerator against the Moebius formula on the whole
corpus, per cycle length. Useful when tuning the enumeration cap."""

import argparse
import time

from wittcycles import (
    build_edge_matrix,
    corpus_graphs,
    count_nonperiodic_classes,
    cycle_class_count,
    enumerate_cycles,
    symmetrize,
    trace_powers,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    args = parser.parse_args()

    print(f"{'graph':<10} {'n':>3} {'cycles':>10} {'classes':>9} {'seconds':>8}  ok")
    for name, graph in corpus_graphs().items():
        sg = symmetrize(graph)
        traces = trace_powers(build_edge_matrix(sg), args.n_max)
        for n in range(1, args.n_max + 1):
            start = time.perf_counter()
            enumerated = sum(1 for _ in enumerate_cycles(sg, n, cap=args.n_max))
            classes = count_nonperiodic_classes(sg, n, cap=args.n_max)
            elapsed = time.perf_counter() - start
            ok = enumerated == traces[n - 1] and classes == cycle_class_count(n, traces)
            print(f"{name:<10} {n:>3} {enumerated:>10} {classes:>9} {elapsed:>8.3f}  {ok}")


if __name__ == "__main__":
    main()
