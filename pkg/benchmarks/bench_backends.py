#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the double-precision pfaffian summation and the generator-action
classifier on both backends and prints the speedup; also times the
memoized vs plain hook recursion on exact arrays.  Run from anywhere:

    python benchmarks/bench_backends.py [--repeat 5]
"""
import argparse
import random
import time
from fractions import Fraction

from pfsym import _pure
from pfsym.pfaffian import SYMMETRIC, TriangularArray, hook_expand_symmetric, upper_pairs

try:
    from pfsym import _native
except ImportError:
    _native = None


def best_of(fn, args_list, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best / len(args_list)


def bench_pf_double(rng, repeat):
    rows = []
    for two_n, calls in ((6, 5000), (8, 2000), (10, 200), (12, 20), (14, 2)):
        args = [
            (two_n, [rng.uniform(-2, 2) for _ in range(two_n * (two_n - 1) // 2)])
            for _ in range(calls)
        ]
        _pure.pf_double(*args[0])  # warm the matching table
        pure_t = best_of(_pure.pf_double, args, repeat)
        native_t = best_of(_native.pf_double, args, repeat) if _native else None
        rows.append((f"pf_double 2n={two_n}", native_t, pure_t))
    return rows


def bench_classifier(rng, repeat):
    rows = []
    for two_n, calls in ((6, 2000), (8, 500)):
        perms = []
        for _ in range(calls):
            images = list(range(two_n))
            rng.shuffle(images)
            perms.append((two_n, images, False))
        _pure.classify_pf_action(*perms[0])
        pure_t = best_of(_pure.classify_pf_action, perms, repeat)
        native_t = best_of(_native.classify_pf_action, perms, repeat) if _native else None
        rows.append((f"classify 2n={two_n}", native_t, pure_t))
    return rows


def bench_hook_memo(rng, repeat):
    # exact arithmetic, so this one is backend-independent: it measures the
    # optional subset-memoized evaluator against the plain recursion
    rows = []
    for two_n, calls in ((8, 20), (10, 2)):
        arrays = [
            TriangularArray(
                two_n, SYMMETRIC,
                {p: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for p in upper_pairs(two_n)},
            )
            for _ in range(calls)
        ]
        plain = best_of(lambda arr: hook_expand_symmetric(arr, 1), [(arr,) for arr in arrays], repeat)
        memo = best_of(
            lambda arr: hook_expand_symmetric(arr, 1, memoize=True), [(arr,) for arr in arrays], repeat
        )
        rows.append((f"hook 2n={two_n} plain", None, plain))
        rows.append((f"hook 2n={two_n} memo", None, memo))
    return rows


def fmt(seconds):
    if seconds is None:
        return "n/a"
    if seconds < 1e-6:
        return f"{seconds * 1e9:8.1f} ns"
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f} us"
    if seconds < 1.0:
        return f"{seconds * 1e3:8.1f} ms"
    return f"{seconds:8.2f} s "


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions (best-of)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _native is None:
        print("compiled backend not built; timing the pure backend only\n")

    rng = random.Random(args.seed)
    rows = (
        bench_pf_double(rng, args.repeat)
        + bench_classifier(rng, args.repeat)
        + bench_hook_memo(rng, args.repeat)
    )

    print(f"{'kernel':<20} {'native/call':>12} {'python/call':>12} {'speedup':>9}")
    for name, native_t, pure_t in rows:
        speedup = f"{pure_t / native_t:8.1f}x" if native_t else "      --"
        print(f"{name:<20} {fmt(native_t):>12} {fmt(pure_t):>12} {speedup:>9}")


if __name__ == "__main__":
    main()
