#!/usr/bin/env python3
"""Benchmark the kernel backends on the endomorphism-search hot loops.

Workloads, on an eta window of radius MULT * 840:
  language   build the factor bitset at the validation horizon
  sweep      fused apply-and-check over every rule table of width <= WIDTH
             (early exit on the first bad factor, the common case)
  apply      full-window rule application without early exit (the survivor
             classification path)

Usage: python bench/bench_kernels.py [--width 3] [--radius-mult 5] [--repeat 5]
"""

import argparse
import time

from bfree_toeplitz import eta_window, family_for_window, make_family
from bfree_toeplitz.kernels import available_backends


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--width", type=int, default=3)
    parser.add_argument("--radius-mult", type=int, default=5)
    parser.add_argument("--horizon", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    radius = args.radius_mult * 840
    family = family_for_window(make_family([3, 5, 7]), -radius, radius)
    bits = eta_window(family, -radius, radius).bits()
    tables = [
        (width, bytes((index >> w) & 1 for w in range(1 << width)))
        for width in range(1, args.width + 1)
        for index in range(1 << (1 << width))
    ]
    print(f"window: {len(bits)} symbols, {len(tables)} rule tables, horizon {args.horizon}")

    backends = available_backends()
    results: dict[str, dict[str, float]] = {}
    survivors = {}
    for name, impl in sorted(backends.items()):
        allowed = impl.language_bitset(bits, args.horizon)
        results[name] = {
            "language": best_of(args.repeat, lambda: impl.language_bitset(bits, args.horizon)),
            "sweep": best_of(
                args.repeat,
                lambda: sum(impl.rule_survives(bits, w, t, args.horizon, allowed) for w, t in tables),
            ),
            "apply": best_of(
                args.repeat, lambda: [impl.apply_rule(bits, w, t) for w, t in tables[256:276]]
            ),
        }
        survivors[name] = sum(impl.rule_survives(bits, w, t, args.horizon, allowed) for w, t in tables)

    if len(set(survivors.values())) > 1:
        raise SystemExit(f"backends disagree on survivor counts: {survivors}")
    print(f"surviving rule tables (all backends agree): {survivors.popitem()[1]}")

    workloads = ("language", "sweep", "apply")
    print(f"\n{'backend':<10}" + "".join(f"{w:>12}" for w in workloads))
    for name in sorted(results):
        row = results[name]
        print(f"{name:<10}" + "".join(f"{row[w] * 1000:>10.2f}ms" for w in workloads))
    if {"pure", "cython"} <= results.keys():
        print(f"{'speedup':<10}" + "".join(
            f"{results['pure'][w] / results['cython'][w]:>11.1f}x" for w in workloads
        ))
    else:
        print("\ncompiled backend not built; only the pure backend was timed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
