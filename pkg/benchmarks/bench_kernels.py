#!/usr/bin/env python3
"""Benchmark the compiled cycle kernels against the pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--repeats N]

Times fixed-length cycle counting on full doubled Odd hosts and on a
seeded random subgraph, for both backends, and reports the speedup.
"""

import argparse
import time

from djturan import EdgeSubgraph, build_graph, kernels, seeded_random_subgraphs


def time_call(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not available; showing pure-Python timings only")

    cases = []
    for n, k, lengths in ((5, 2, (6, 10, 14)), (7, 3, (6, 10, 14)), (9, 3, (6, 8))):
        g = build_graph(n, k)
        full = EdgeSubgraph.full(g)
        rand = seeded_random_subgraphs(g, 12345, 5)[4]  # densest corpus entry
        for length in lengths:
            cases.append((f"J({n};{k},{k + 1}) full", full, length))
        cases.append((f"J({n};{k},{k + 1}) random", rand, lengths[-1]))

    header = f"{'case':<22} {'L':>3} {'count':>9}"
    for name in backends:
        header += f" {name:>12}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))

    for label, s, length in cases:
        indptr, nbr, _ = s.csr()
        row = f"{label:<22} {length:>3}"
        times = {}
        count = None
        for name in backends:
            be = kernels.get_backend(name)
            elapsed, (c, truncated) = time_call(
                be.count_cycles_fixed_length, indptr, nbr, length, 10**9,
                repeats=args.repeats,
            )
            times[name] = elapsed
            if count is None:
                count = c
            elif count != c:
                raise SystemExit(f"backend disagreement on {label} L={length}: {count} vs {c}")
        row += f" {count:>9}"
        for name in backends:
            row += f" {times[name] * 1000:>10.2f}ms"
        if len(backends) == 2:
            row += f" {times['python'] / times['cython']:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
