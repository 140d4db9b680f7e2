"""Empirical per-position probability bounds for relative scoring.

Bounds are built from the evaluation batch itself: for each token-offset
within spans of the same rule (default scope) the batch minimum and
maximum are recorded. Offsets beyond the shortest span in the group fall
back to the global batch extremes so variable span lengths never abort
scoring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from ..errors import BoundsMismatchError

DEFAULT_EPSILON = 1e-9


class BoundsScope(Enum):
    PER_SMELL_TYPE_BATCH = "per_smell_type_batch"
    GLOBAL_BATCH = "global_batch"


@dataclass(frozen=True)
class ReferenceBounds:
    """Per-offset (p_min, p_max) pairs plus a global fallback."""

    offsets: tuple[tuple[float, float], ...]
    global_bounds: tuple[float, float] | None = None
    epsilon: float = DEFAULT_EPSILON
    scope: BoundsScope = BoundsScope.PER_SMELL_TYPE_BATCH

    def __post_init__(self):
        for k, (lo, hi) in enumerate(self.offsets):
            if lo > hi:
                raise ValueError(f"p_min > p_max at offset {k}")
        if self.global_bounds is not None and self.global_bounds[0] > self.global_bounds[1]:
            raise ValueError("global p_min > p_max")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")

    def at(self, offset: int) -> tuple[float, float]:
        if offset < len(self.offsets):
            return self.offsets[offset]
        if self.global_bounds is None:
            raise BoundsMismatchError(
                f"offset {offset} not covered by bounds of length {len(self.offsets)}"
            )
        return self.global_bounds

    def resolve(self, length: int) -> tuple[list[float], list[float]]:
        """Materialize p_min/p_max arrays for a span of the given length."""
        mins, maxs = [], []
        for k in range(length):
            lo, hi = self.at(k)
            mins.append(lo)
            maxs.append(hi)
        return mins, maxs


@dataclass
class BoundsSet:
    """Bounds per rule group, built from one evaluation batch."""

    scope: BoundsScope
    epsilon: float
    per_rule: dict[str, ReferenceBounds] = field(default_factory=dict)
    pooled: ReferenceBounds | None = None

    def for_rule(self, rule_id: str) -> ReferenceBounds:
        if self.scope is BoundsScope.GLOBAL_BATCH:
            if self.pooled is None:
                raise BoundsMismatchError("empty batch: no pooled bounds")
            return self.pooled
        try:
            return self.per_rule[rule_id]
        except KeyError:
            raise BoundsMismatchError(f"no bounds built for rule {rule_id!r}") from None


def _group_bounds(
    groups: Iterable[Sequence[float]],
    global_bounds: tuple[float, float],
    epsilon: float,
    scope: BoundsScope,
) -> ReferenceBounds:
    groups = [g for g in groups if g]
    if not groups:
        raise ValueError("cannot build bounds from an empty group")
    shortest = min(len(g) for g in groups)
    offsets = []
    for k in range(shortest):
        column = [g[k] for g in groups]
        offsets.append((min(column), max(column)))
    return ReferenceBounds(
        offsets=tuple(offsets),
        global_bounds=global_bounds,
        epsilon=epsilon,
        scope=scope,
    )


def build_bounds(
    span_probs: Iterable[tuple[str, Sequence[float]]],
    *,
    epsilon: float = DEFAULT_EPSILON,
    scope: BoundsScope = BoundsScope.PER_SMELL_TYPE_BATCH,
) -> BoundsSet:
    """Two-pass reduction over (rule_id, span probabilities) pairs."""
    by_rule: dict[str, list[Sequence[float]]] = {}
    everything: list[float] = []
    for rule_id, probs in span_probs:
        if not probs:
            continue
        by_rule.setdefault(rule_id, []).append(probs)
        everything.extend(probs)
    result = BoundsSet(scope=scope, epsilon=epsilon)
    if not everything:
        return result
    global_bounds = (min(everything), max(everything))
    if scope is BoundsScope.GLOBAL_BATCH:
        result.pooled = _group_bounds(
            [g for groups in by_rule.values() for g in groups],
            global_bounds,
            epsilon,
            scope,
        )
    else:
        for rule_id, groups in by_rule.items():
            result.per_rule[rule_id] = _group_bounds(groups, global_bounds, epsilon, scope)
    return result
