#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_backends.py [--repeats N]

Each row times one hot kernel on a representative workload through both
backends and reports the speedup of the compiled extension.
"""

from __future__ import annotations

import argparse
import time

from mersroot import backend
from mersroot import bigraph, circulant, delta_rings, galgebra


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


WORKLOADS = [
    ("unit scan, p=23 (2^23 patterns)", lambda: galgebra.unit_scan_counts(23)),
    ("unit order census, p=13", lambda: galgebra.unit_order_census(13)),
    ("invertible circulants, p=13", lambda: circulant.enumerate_invertible_circulants(13)),
    ("matching parity scan, p=13", lambda: bigraph.count_odd_matching_graphs(13)),
    ("GF(8)[C7] delta check (8^7 elements)", lambda: delta_rings.unit_census(8, (7, 1), 7)),
    ("GF(8)[C7] Frobenius t**8 = t", lambda: delta_rings.frobenius_fixed_check(8, (7, 1))),
    (
        "permutation-sum permanent, J9 x32",
        lambda: [backend.kernels().permanent_permsum([0x1FF] * 9, 9) for _ in range(32)],
    ),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    names = backend.available_backends()
    if "compiled" not in names:
        print("compiled extension not built; timing the pure backend only")

    width = max(len(label) for label, _ in WORKLOADS)
    header = f"{'workload':<{width}}  " + "".join(f"{name:>12}" for name in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, fn in WORKLOADS:
        timings = {}
        for name in names:
            with backend.forced(name):
                timings[name] = _time(fn, args.repeats)
        row = f"{label:<{width}}  " + "".join(f"{timings[name]:>11.3f}s" for name in names)
        if "compiled" in timings and "pure" in timings and timings["compiled"] > 0:
            row += f"{timings['pure'] / timings['compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
