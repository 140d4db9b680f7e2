"""Pure-Python span-aggregation kernels.

Reference implementation of the hot scoring loops; the compiled twin in
psckit._speedups must agree bit-for-bit on the same inputs. Spans are
inclusive token-index ranges [i, j].
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def span_mean(probs: Sequence[float], i: int, j: int) -> float:
    total = 0.0
    for k in range(i, j + 1):
        total += probs[k]
    return total / (j - i + 1)


def span_median(probs: Sequence[float], i: int, j: int) -> float:
    window = sorted(probs[i : j + 1])
    n = len(window)
    mid = n // 2
    if n % 2:
        return window[mid]
    return (window[mid - 1] + window[mid]) / 2.0


def span_relative(
    probs: Sequence[float],
    i: int,
    j: int,
    p_min: Sequence[float],
    p_max: Sequence[float],
    epsilon: float,
) -> float:
    total = 0.0
    for k in range(j - i + 1):
        total += (probs[i + k] - p_min[k]) / (p_max[k] - p_min[k] + epsilon)
    return total / (j - i + 1)
