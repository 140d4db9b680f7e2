"""Severity labeling and information gain of metric scores.

A snippet is high severity when more than half of its tokens fall inside
smell spans. Information gain is the entropy of the severity label minus
its conditional entropy given a metric score, with the score discretized
into equal-frequency bins; binning depends only on the ordering of the
scores, so any strictly monotone rescaling leaves the gain unchanged.
Entropies are in bits.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .align import TokenSpan, align
from .core import SeverityLabel, SmellDiagnostic, TokenTrace
from .errors import DegenerateError, UnalignableError

DEFAULT_BINS = 10
SEVERITY_TOKEN_FRACTION = 0.5


def label_severity(
    trace: TokenTrace, diagnostics: Sequence[SmellDiagnostic]
) -> tuple[int, int, SeverityLabel]:
    """(smelly tokens, total tokens, label); overlapping spans count once."""
    n_t = len(trace.tokens)
    smelly: set[int] = set()
    for diag in diagnostics:
        try:
            span = align(diag, trace)
        except UnalignableError:
            continue
        smelly.update(range(span.i, span.j + 1))
    n_s = len(smelly)
    label = (
        SeverityLabel.HIGH
        if n_t > 0 and n_s / n_t > SEVERITY_TOKEN_FRACTION
        else SeverityLabel.LOW
    )
    return n_s, n_t, label


def smelly_fraction_from_spans(spans: Iterable[TokenSpan], n_tokens: int) -> float:
    covered: set[int] = set()
    for span in spans:
        covered.update(range(span.i, span.j + 1))
    return len(covered) / n_tokens if n_tokens else 0.0


def _entropy_bits(counts: Iterable[int]) -> float:
    total = sum(counts)
    if total == 0:
        return 0.0
    h = 0.0
    for c in counts:
        if c:
            p = c / total
            h -= p * math.log2(p)
    return h


def _equal_frequency_bins(scores: Sequence[float], bins: int) -> list[int]:
    """Bin index per score; rank-based edges keep ties in one bin."""
    n = len(scores)
    ordered = sorted(scores)
    edges = []
    for b in range(1, bins):
        edge = ordered[(b * n) // bins - 1] if (b * n) // bins >= 1 else ordered[0]
        edges.append(edge)
    edges = sorted(set(edges))
    return [bisect_left(edges, x) for x in scores]


def information_gain(
    labels: Sequence[SeverityLabel], scores: Sequence[float], bins: int = DEFAULT_BINS
) -> float:
    """H(S) - H(S | binned X) in bits; a single-class labeling has gain 0."""
    if len(labels) != len(scores):
        raise DegenerateError("labels and scores must have equal length")
    if len(labels) < 2:
        raise DegenerateError("information gain needs at least 2 observations")
    if bins < 1:
        raise DegenerateError("bins must be positive")
    label_counts = Counter(labels)
    if len(label_counts) < 2:
        return 0.0
    h_s = _entropy_bits(label_counts.values())

    assignments = _equal_frequency_bins(scores, bins)
    per_bin: dict[int, Counter] = {}
    for label, b in zip(labels, assignments):
        per_bin.setdefault(b, Counter())[label] += 1
    n = len(labels)
    h_s_given_x = sum(
        (sum(counter.values()) / n) * _entropy_bits(counter.values())
        for counter in per_bin.values()
    )
    return h_s - h_s_given_x


def label_entropy_bits(labels: Sequence[SeverityLabel]) -> float:
    return _entropy_bits(Counter(labels).values())


def _ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[k : k + n]) for k in range(len(tokens) - n + 1))


def bleu(candidate: Sequence[str], reference: Sequence[str], max_n: int = 4) -> float:
    """Smoothed BLEU: geometric mean of n-gram precisions times brevity penalty.

    The unigram precision is unsmoothed (zero overlap scores 0); higher
    orders use add-one smoothing so short candidates stay comparable.
    """
    if not reference:
        raise ValueError("reference must be non-empty")
    if not candidate:
        return 0.0
    log_sum = 0.0
    for n in range(1, max_n + 1):
        cand = _ngram_counts(candidate, n)
        ref = _ngram_counts(reference, n)
        matched = sum(min(count, ref[gram]) for gram, count in cand.items())
        total = sum(cand.values())
        if n == 1:
            if matched == 0:
                return 0.0
            precision = matched / total
        else:
            precision = (matched + 1) / (total + 1)
        log_sum += math.log(precision)
    geo_mean = math.exp(log_sum / max_n)
    c, r = len(candidate), len(reference)
    brevity = 1.0 if c >= r else math.exp(1.0 - r / c)
    return geo_mean * brevity


@dataclass
class SeverityDataset:
    """Rows of per-sample severity labels and metric scores."""

    rows: list["SeverityRow"] = field(default_factory=list)

    def add(
        self,
        sample_id: str,
        rule_id: str,
        n_s: int,
        n_t: int,
        metric_scores: Mapping[str, float],
    ) -> None:
        if n_s > n_t:
            raise ValueError("smelly token count exceeds total token count")
        label = (
            SeverityLabel.HIGH
            if n_t > 0 and n_s / n_t > SEVERITY_TOKEN_FRACTION
            else SeverityLabel.LOW
        )
        self.rows.append(
            SeverityRow(
                sample_id=sample_id,
                rule_id=rule_id,
                severity=label,
                n_s=n_s,
                n_t=n_t,
                metric_scores=dict(metric_scores),
            )
        )

    def rules(self) -> list[str]:
        return sorted({row.rule_id for row in self.rows})


@dataclass(frozen=True)
class SeverityRow:
    sample_id: str
    rule_id: str
    severity: SeverityLabel
    n_s: int
    n_t: int
    metric_scores: dict[str, float]


@dataclass(frozen=True)
class IgReportRow:
    rule_id: str
    metric: str
    ig_bits: float
    h_s_bits: float
    n: int


def ig_report(
    dataset: SeverityDataset,
    metrics: Sequence[str],
    bins: int = DEFAULT_BINS,
    warn: "list[str] | None" = None,
) -> list[IgReportRow]:
    """Per-(rule, metric) information gain table.

    Rules whose group is too small for the gain computation are omitted
    with a warning entry; a missing metric column raises KeyError.
    """
    rows = []
    for rule_id in dataset.rules():
        group = [r for r in dataset.rows if r.rule_id == rule_id]
        if len(group) < 2:
            if warn is not None:
                warn.append(f"rule {rule_id}: fewer than 2 rows, omitted")
            continue
        labels = [r.severity for r in group]
        for metric in metrics:
            missing = [r.sample_id for r in group if metric not in r.metric_scores]
            if missing:
                raise KeyError(
                    f"metric {metric!r} missing for samples {missing[:3]} of rule {rule_id}"
                )
            scores = [r.metric_scores[metric] for r in group]
            rows.append(
                IgReportRow(
                    rule_id=rule_id,
                    metric=metric,
                    ig_bits=information_gain(labels, scores, bins),
                    h_s_bits=label_entropy_bits(labels),
                    n=len(group),
                )
            )
    return rows
