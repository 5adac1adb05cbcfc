"""Time the compiled kernels against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from psbv import _fallback
from psbv.arith import base_primes

try:
    from psbv import _kernels
except ImportError:
    _kernels = None


def cases():
    lo, hi = 10**9, 10**9 + (1 << 22)
    bp = base_primes(hi)
    vals = np.ascontiguousarray(np.random.default_rng(0).uniform(0, 1000, 2000))
    deltas = np.array([1e-3, 1e-1, 1.0, 10.0])
    return {
        "sieve_segment (4M span near 1e9)": lambda m: m.sieve_segment(lo, hi, bp),
        "ndelta_brute (2000 values, 4 deltas)": lambda m: m.ndelta_brute(vals, deltas),
        "progression_expsum (1e6 terms)": lambda m: m.progression_expsum(1, 1, 10**6, 1e-4, 1.5, 0.3, 0.9),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'kernel':40s} {'cython s':>10s} {'numpy s':>10s} {'speedup':>8s}")
    for name, fn in cases().items():
        py = min(timeit.repeat(lambda: fn(_fallback), number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{name:40s} {'-':>10s} {py:10.4f} {'-':>8s}")
            continue
        cy = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat))
        print(f"{name:40s} {cy:10.4f} {py:10.4f} {py / cy:8.1f}x")


if __name__ == "__main__":
    main()
