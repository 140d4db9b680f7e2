#!/usr/bin/env python3
"""Benchmark the compiled span kernels against the pure-Python fallback.

Workload: scoring every span of a large batch (the hot loop of a corpus
run). Prints per-backend wall time and the speedup.

Usage: python benchmarks/bench_kernels.py [--spans 200000] [--span-len 24]
"""

from __future__ import annotations

import argparse
import random
import time
from array import array

from psckit.psc import _pykernels

try:
    from psckit import _speedups
except ImportError:
    _speedups = None


def run(backend, probs: array, spans: list[tuple[int, int]], mins: array, maxs: array) -> float:
    start = time.perf_counter()
    sink = 0.0
    for i, j in spans:
        sink += backend.span_mean(probs, i, j)
        sink += backend.span_median(probs, i, j)
        sink += backend.span_relative(probs, i, j, mins, maxs, 1e-9)
    elapsed = time.perf_counter() - start
    assert sink != 0.0
    return elapsed


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--spans", type=int, default=200_000)
    parser.add_argument("--span-len", type=int, default=24)
    parser.add_argument("--tokens", type=int, default=1_000_000)
    args = parser.parse_args()

    rng = random.Random(1)
    probs = array("d", (rng.random() for _ in range(args.tokens)))
    spans = []
    for _ in range(args.spans):
        i = rng.randrange(args.tokens - args.span_len)
        spans.append((i, i + args.span_len - 1))
    mins = array("d", (0.0 for _ in range(args.span_len)))
    maxs = array("d", (1.0 for _ in range(args.span_len)))

    py_time = run(_pykernels, probs, spans, mins, maxs)
    print(f"pure python : {py_time:8.3f}s  ({args.spans / py_time:,.0f} spans/s)")
    if _speedups is None:
        print("compiled    : unavailable (extension not built)")
        return 0
    c_time = run(_speedups, probs, spans, mins, maxs)
    print(f"compiled    : {c_time:8.3f}s  ({args.spans / c_time:,.0f} spans/s)")
    print(f"speedup     : {py_time / c_time:8.1f}x")

    # sanity: identical results on a sample
    for i, j in spans[:100]:
        assert _pykernels.span_mean(probs, i, j) == _speedups.span_mean(probs, i, j)
        assert _pykernels.span_median(probs, i, j) == _speedups.span_median(probs, i, j)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
