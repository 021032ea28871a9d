#!/usr/bin/env python3
"""Benchmark the numba kernels against the numpy/pure fallbacks.

Covers the two hot loops: Ryser's permanent and subset-mask counting
(path qualification).  Run from the repo root:

    python3 benchmarks/benchmark_kernels.py
    python3 benchmarks/benchmark_kernels.py --ryser-sizes 8 10 12 --repeats 5
"""

import argparse
import time

import numpy as np

from permmatch import kernels
from permmatch.harness import _qualification_masks


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_ryser(sizes, repeats):
    print("Ryser permanent (0/1 matrices)")
    print(f"{'n':>4} {'numba (s)':>12} {'numpy (s)':>12} {'bigint (s)':>12} {'speedup':>9}")
    rng = np.random.default_rng(0)
    for n in sizes:
        a = (rng.random((n, n)) < 0.5).astype(np.int64)
        rows = a.tolist()
        t_np = best_of(lambda: kernels.ryser_permanent_numpy(a), repeats)
        t_big = best_of(lambda: kernels.ryser_permanent_bigint(rows), repeats)
        if kernels.NUMBA_AVAILABLE:
            kernels.ryser_permanent_numba(a)  # JIT warmup
            t_nb = best_of(lambda: kernels.ryser_permanent_numba(a), repeats)
            assert kernels.ryser_permanent_numba(a) == kernels.ryser_permanent_bigint(rows)
            print(f"{n:>4} {t_nb:>12.6f} {t_np:>12.6f} {t_big:>12.6f} {t_np / t_nb:>8.1f}x")
        else:
            print(f"{n:>4} {'-':>12} {t_np:>12.6f} {t_big:>12.6f} {'-':>9}")


def bench_subset_masks(n, graphs, repeats):
    print(f"\nSubset-mask counting (path qualification, n={n}, {graphs} graphs)")
    masks = _qualification_masks(n)
    rng = np.random.default_rng(1)
    gmasks = [int(g) for g in rng.integers(0, 1 << (n * n), size=graphs, dtype=np.uint64)]

    def run(counter):
        for g in gmasks:
            counter(masks, g)

    t_np = best_of(lambda: run(kernels.count_subset_masks_numpy), repeats)
    if kernels.NUMBA_AVAILABLE:
        kernels.count_subset_masks_numba(masks, gmasks[0])  # JIT warmup
        t_nb = best_of(lambda: run(kernels.count_subset_masks_numba), repeats)
        print(f"numba: {t_nb:.6f} s   numpy: {t_np:.6f} s   speedup: {t_np / t_nb:.1f}x")
    else:
        print(f"numpy: {t_np:.6f} s   (numba unavailable or disabled)")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ryser-sizes", type=int, nargs="+", default=[6, 8, 10, 12])
    parser.add_argument("--mask-n", type=int, default=7)
    parser.add_argument("--graphs", type=int, default=2000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if not kernels.NUMBA_AVAILABLE:
        print("note: numba unavailable or PERMMATCH_NO_NUMBA set; fallback only\n")
    bench_ryser(args.ryser_sizes, args.repeats)
    bench_subset_masks(args.mask_n, args.graphs, args.repeats)


if __name__ == "__main__":
    main()
