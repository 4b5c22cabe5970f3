"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--bound N]
"""

from __future__ import annotations

import argparse
import time

from eideal import _fallback

try:
    from eideal import _speedups
except ImportError:
    _speedups = None


def timed(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--bound", type=int, default=10**6)
    args = parser.parse_args()
    x = args.bound

    cases = [
        ("sieve_primes(%d)" % x, "sieve_primes", (x,)),
        ("prime_count(%d)" % (10 * x), "prime_count", (10 * x,)),
        ("count_pattern 3 symbols to %d" % x, "count_pattern", ([3, 65, 195], [1, 1, 1], x)),
        ("count_pattern 7 symbols to %d" % x, "count_pattern", ([3, 5, 13, 15, 39, 65, 195], [1] * 7, x)),
        ("pattern_counts (q,k,r) to %d" % x, "pattern_counts", ([3, 5, 13], x)),
    ]

    print("%-38s %12s %12s %9s" % ("kernel", "python", "compiled", "speedup"))
    for label, name, fnargs in cases:
        t_py, r_py = timed(getattr(_fallback, name), *fnargs)
        if _speedups is None:
            print("%-38s %10.3fms %12s" % (label, t_py * 1e3, "missing"))
            continue
        t_c, r_c = timed(getattr(_speedups, name), *fnargs)
        assert r_py == r_c, "backend results differ on %s" % label
        print("%-38s %10.3fms %10.3fms %8.1fx" % (label, t_py * 1e3, t_c * 1e3, t_py / t_c))


if __name__ == "__main__":
    main()
