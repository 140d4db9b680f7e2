"""Propensity score computation: span aggregation plus reference bounds."""

from .bounds import (
    DEFAULT_EPSILON,
    BoundsScope,
    BoundsSet,
    ReferenceBounds,
    build_bounds,
)
from .kernels import BACKEND
from .scoring import (
    DEFAULT_DECISION_AGGREGATE,
    DEFAULT_LAMBDA,
    SmellSpanScore,
    align_and_score,
    batch_bounds,
    classify,
    psc_mean,
    psc_median,
    psc_relative,
    score_batch,
    score_span,
)

__all__ = [
    "BACKEND",
    "DEFAULT_DECISION_AGGREGATE",
    "DEFAULT_EPSILON",
    "DEFAULT_LAMBDA",
    "BoundsScope",
    "BoundsSet",
    "ReferenceBounds",
    "SmellSpanScore",
    "align_and_score",
    "batch_bounds",
    "build_bounds",
    "classify",
    "psc_mean",
    "psc_median",
    "psc_relative",
    "score_batch",
    "score_span",
]
