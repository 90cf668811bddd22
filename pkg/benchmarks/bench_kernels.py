#!/usr/bin/env python3
"""Benchmark the compiled exact-arithmetic kernels against the pure-Python
fallback on the workloads that dominate the exhaustive search.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Workloads:
  * complement charpoly of random signed trees (the criterion-4 hot loop)
  * charpoly of dense +-1 symmetric matrices
  * walk-matrix determinants (big-integer Bareiss)
"""

import argparse
import random
import time

from sgdgs import _kernels_py

try:
    from sgdgs import _speedups
except ImportError:
    _speedups = None

from sgdgs.search import random_signing, random_tree


def tree_complement_rows(n, rng):
    g = random_signing(random_tree(n, rng), rng)
    a = g.adjacency()
    return [
        [(0 if i == j else 1) - a[i, j] for j in range(n)] for i in range(n)
    ]


def dense_pm1_rows(n, rng):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.choice((-1, 0, 1))
            rows[i][j] = rows[j][i] = v
    return rows


def walk_rows(n, rng):
    g = random_signing(random_tree(n, rng), rng)
    a = g.adjacency()
    cols = [[1] * n]
    for _ in range(n - 1):
        v = cols[-1]
        cols.append([sum(a[i, j] * v[j] for j in range(n)) for i in range(n)])
    return [[cols[k][i] for k in range(n)] for i in range(n)]


def timed(fn, inputs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for rows in inputs:
            fn(rows)
        best = min(best, time.perf_counter() - start)
    return best


def bench(label, make_input, sizes, kernel_name, count, repeat):
    print(f"\n{label}")
    print(f"  {'n':>4} {'pure':>12} {'compiled':>12} {'speedup':>9}")
    for n in sizes:
        rng = random.Random(1000 + n)
        inputs = [make_input(n, rng) for _ in range(count)]
        pure_fn = getattr(_kernels_py, kernel_name)
        t_pure = timed(pure_fn, inputs, repeat)
        if _speedups is None:
            print(f"  {n:>4} {t_pure * 1e3:>10.1f}ms {'n/a':>12} {'n/a':>9}")
            continue
        fast_fn = getattr(_speedups, kernel_name)
        for rows in inputs[:3]:
            assert fast_fn(rows) == pure_fn(rows), "backends disagree"
        t_fast = timed(fast_fn, inputs, repeat)
        print(
            f"  {n:>4} {t_pure * 1e3:>10.1f}ms {t_fast * 1e3:>10.1f}ms "
            f"{t_pure / t_fast:>8.2f}x"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--count", type=int, default=200, help="matrices per size")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not available; pure-Python timings only")

    bench(
        "complement charpoly of random signed trees (criterion-4 hot loop)",
        tree_complement_rows,
        (8, 10, 12, 14),
        "charpoly_coeffs",
        args.count,
        args.repeat,
    )
    bench(
        "charpoly of dense {-1,0,1} symmetric matrices",
        dense_pm1_rows,
        (10, 14, 18),
        "charpoly_coeffs",
        args.count,
        args.repeat,
    )
    bench(
        "walk-matrix determinant (big-integer Bareiss)",
        walk_rows,
        (10, 14, 18),
        "det_int",
        args.count,
        args.repeat,
    )


if __name__ == "__main__":
    main()
