#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure Python fallback.

Runs the real workloads (not microbenchmarks): the subset dichotomy scan on
the acceptance grid, the shadow-theorem family scan, the joint-shadow sweep,
the minimum-shadow search, and the whole-graph shadow-floor sweep. Results
from the two backends are asserts-checked for equality before timing is
reported, so the table doubles as a parity smoke test.

Usage:
    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from ordshadow import _pykernels
from ordshadow.lattice import line_points, simplex_points
from ordshadow.tables import graph_tables

try:
    from ordshadow import _ckernels
except ImportError:
    _ckernels = None


def dichotomy_inputs(d, n):
    points = simplex_points(d, n)
    rank_down = {p: i for i, p in enumerate(simplex_points(d, n - 1))}
    shadow_masks = []
    for p in points:
        mask = 0
        for j in range(d):
            if p[j] > 0:
                mask |= 1 << rank_down[p[:j] + (p[j] - 1,) + p[j + 1:]]
        shadow_masks.append(mask)
    rank = {p: i for i, p in enumerate(points)}
    line_masks = []
    for j in range(1, d + 1):
        for k in range(j + 1, d + 1):
            lm = 0
            for p in line_points(d, n, j, k):
                lm |= 1 << rank[p]
            line_masks.append(lm)
    return shadow_masks, line_masks


def workloads():
    t5 = graph_tables(5)
    masks5 = np.ascontiguousarray(t5.masks)
    exc5 = np.ascontiguousarray(t5.excesses)
    small = np.ascontiguousarray(
        t5.masks[np.nonzero(t5.shadow_sizes <= 3)[0]])
    sm, lm = dichotomy_inputs(3, 5)

    yield ("line dichotomy (3,5), 695k subsets",
           lambda k: k.subset_dichotomy_scan(sm, lm, 9, 0, len(sm)))
    yield ("shadow theorem n=5 size<=4",
           lambda k: k.deficiency_scan(small, 4, 0, 0, small.shape[0], 1 << 20))
    yield ("joint-shadow sweep n=5 t<=3 (178M nodes)",
           lambda k: k.difftypes_scan(masks5, exc5, 5, 3, 0, masks5.shape[0]))
    yield ("min shadow n=5 t=4",
           lambda k: k.min_shadow_scan(masks5, 4, 0, masks5.shape[0], 4, 10 ** 12))
    yield ("shadow floor sweep n=7 (2M graphs)",
           lambda k: k.single_graph_sweep(7, 0, 1 << 21))


def best_time(fn, repeat):
    out = None
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled kernels not built; timing the pure backend only\n")

    width = 46
    header = f"{'workload':<{width}} {'python':>10}"
    if _ckernels is not None:
        header += f" {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, run in workloads():
        t_py, out_py = best_time(lambda: run(_pykernels), args.repeat)
        row = f"{name:<{width}} {t_py:>9.3f}s"
        if _ckernels is not None:
            t_c, out_c = best_time(lambda: run(_ckernels), args.repeat)
            assert out_py == out_c, f"backend mismatch on {name!r}"
            row += f" {t_c:>9.3f}s {t_py / t_c:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
