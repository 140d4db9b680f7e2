"""Propensity score aggregation over aligned token spans.

Three aggregators over the span's token probabilities: mean (overall
trend), median (robust to local fluctuations) and relative (rescaled by
empirical per-position bounds). A score at or above the threshold marks
the model as propense to the smell.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..align import TokenSpan, align
from ..core import SmellDiagnostic, TokenTrace
from ..errors import UnalignableError
from . import kernels
from .bounds import DEFAULT_EPSILON, BoundsScope, BoundsSet, ReferenceBounds, build_bounds

DEFAULT_LAMBDA = 0.5
#: Aggregate used for the propense verdict; median matches the causal outcome.
DEFAULT_DECISION_AGGREGATE = "median"


@dataclass(frozen=True)
class SmellSpanScore:
    """All three aggregates of one smell span plus the threshold verdict."""

    sample_id: str
    rule_id: str
    span: TokenSpan
    psc_mean: float
    psc_median: float
    psc_relative: float
    propense: bool


def _span_probs(trace: TokenTrace, span: TokenSpan) -> array:
    span.check_within(trace)
    return array("d", (math.exp(t.logprob) for t in trace.tokens[span.i : span.j + 1]))


def psc_mean(trace: TokenTrace, span: TokenSpan) -> float:
    """Arithmetic mean of token probabilities over the span."""
    probs = _span_probs(trace, span)
    return kernels.span_mean(probs, 0, len(probs) - 1)


def psc_median(trace: TokenTrace, span: TokenSpan) -> float:
    """Median of token probabilities (even length: midpoint of the two central values)."""
    probs = _span_probs(trace, span)
    return kernels.span_median(probs, 0, len(probs) - 1)


def psc_relative(trace: TokenTrace, span: TokenSpan, bounds: ReferenceBounds) -> float:
    """Mean of per-position probabilities rescaled into the bounds' unit range."""
    probs = _span_probs(trace, span)
    mins, maxs = bounds.resolve(len(probs))
    return kernels.span_relative(
        probs, 0, len(probs) - 1, array("d", mins), array("d", maxs), bounds.epsilon
    )


def classify(score: float, lam: float = DEFAULT_LAMBDA) -> bool:
    """True iff the score is at or above the propensity threshold."""
    if math.isnan(score) or math.isinf(score):
        raise ValueError(f"score {score!r} is not finite")
    return score >= lam


def score_span(
    trace: TokenTrace,
    rule_id: str,
    span: TokenSpan,
    bounds: ReferenceBounds,
    *,
    lam: float = DEFAULT_LAMBDA,
    decision_aggregate: str = DEFAULT_DECISION_AGGREGATE,
) -> SmellSpanScore:
    mean = psc_mean(trace, span)
    median = psc_median(trace, span)
    relative = psc_relative(trace, span, bounds)
    selected = {"mean": mean, "median": median, "relative": relative}[decision_aggregate]
    return SmellSpanScore(
        sample_id=trace.sample_id,
        rule_id=rule_id,
        span=span,
        psc_mean=mean,
        psc_median=median,
        psc_relative=relative,
        propense=classify(selected, lam),
    )


def score_batch(
    items: Sequence[tuple[TokenTrace, SmellDiagnostic, TokenSpan]],
    *,
    epsilon: float = DEFAULT_EPSILON,
    scope: BoundsScope = BoundsScope.PER_SMELL_TYPE_BATCH,
    lam: float = DEFAULT_LAMBDA,
    decision_aggregate: str = DEFAULT_DECISION_AGGREGATE,
) -> list[SmellSpanScore]:
    """Score a batch of aligned spans, building reference bounds from the batch."""
    bounds_set = batch_bounds(items, epsilon=epsilon, scope=scope)
    return [
        score_span(
            trace,
            diag.rule_id,
            span,
            bounds_set.for_rule(diag.rule_id),
            lam=lam,
            decision_aggregate=decision_aggregate,
        )
        for trace, diag, span in items
    ]


def batch_bounds(
    items: Sequence[tuple[TokenTrace, SmellDiagnostic, TokenSpan]],
    *,
    epsilon: float = DEFAULT_EPSILON,
    scope: BoundsScope = BoundsScope.PER_SMELL_TYPE_BATCH,
) -> BoundsSet:
    return build_bounds(
        ((diag.rule_id, _span_probs(trace, span)) for trace, diag, span in items),
        epsilon=epsilon,
        scope=scope,
    )


def align_and_score(
    pairs: Iterable[tuple[TokenTrace, SmellDiagnostic]],
    *,
    epsilon: float = DEFAULT_EPSILON,
    scope: BoundsScope = BoundsScope.PER_SMELL_TYPE_BATCH,
    lam: float = DEFAULT_LAMBDA,
    decision_aggregate: str = DEFAULT_DECISION_AGGREGATE,
) -> tuple[list[SmellSpanScore], list[tuple[SmellDiagnostic, str]]]:
    """Align diagnostics to their traces and score the batch.

    Returns the scores plus a list of (diagnostic, reason) pairs for
    diagnostics that could not be aligned.
    """
    items = []
    skipped = []
    for trace, diag in pairs:
        try:
            items.append((trace, diag, align(diag, trace)))
        except UnalignableError as exc:
            skipped.append((diag, str(exc)))
    return (
        score_batch(
            items, epsilon=epsilon, scope=scope, lam=lam, decision_aggregate=decision_aggregate
        ),
        skipped,
    )
