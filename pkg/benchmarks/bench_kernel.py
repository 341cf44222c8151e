#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python twin.

Runs identical per-size fair-dominating-set counts through both backends and
reports wall time plus speedup. Results are asserted equal, so this doubles
as a quick parity check.

Usage: python3 benchmarks/bench_kernel.py [--quick]
"""

import argparse
import sys
import time

from fairdom import _kernel_py
from fairdom.engine import _strata
from fairdom.families import cycle, path, triangular_cactus

try:
    from fairdom import _kernel
except ImportError:
    _kernel = None


def count_with(kernel, g, size):
    adj = g.adjacency_masks()
    return sum(kernel.count_stratum(adj, g.n, size, f, 0) for f in _strata(g.n, size))


def bench(kernel, g, size, repeats):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = count_with(kernel, g, size)
        best = min(best, time.perf_counter() - t0)
    return value, best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller cases, one repeat")
    args = parser.parse_args()

    if args.quick:
        cases = [("cycle(18), k=6", cycle(18), 6),
                 ("path(18), k=7", path(18), 7),
                 ("cactus(8) [17 vertices], k=6", triangular_cactus(8), 6)]
        repeats = 1
    else:
        cases = [("cycle(26), k=9", cycle(26), 9),
                 ("path(26), k=9", path(26), 9),
                 ("cactus(12) [25 vertices], k=8", triangular_cactus(12), 8),
                 ("cycle(20), full polynomial", cycle(20), None)]
        repeats = 3

    if _kernel is None:
        print("compiled kernel not available; showing pure-Python timings only")

    width = max(len(name) for name, _, _ in cases)
    print(f"{'case':<{width}}  {'count':>12}  {'compiled':>10}  {'python':>10}  {'speedup':>8}")
    for name, g, size in cases:
        sizes = range(0, g.n + 1) if size is None else [size]

        def run(kernel):
            t0 = time.perf_counter()
            total = 0
            for s in sizes:
                if s == 0:
                    continue
                total += count_with(kernel, g, s)
            return total, time.perf_counter() - t0

        py_val, py_t = min((run(_kernel_py) for _ in range(repeats)), key=lambda r: r[1])
        if _kernel is not None:
            c_val, c_t = min((run(_kernel) for _ in range(repeats)), key=lambda r: r[1])
            if c_val != py_val:
                print(f"BACKEND MISMATCH on {name}: compiled={c_val} python={py_val}")
                return 1
            print(f"{name:<{width}}  {c_val:>12}  {c_t:>9.3f}s  {py_t:>9.3f}s  {py_t / c_t:>7.1f}x")
        else:
            print(f"{name:<{width}}  {py_val:>12}  {'-':>10}  {py_t:>9.3f}s  {'-':>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
