"""Prompt catalogue and the prompt-based mitigation experiment.

Four prompt formulations with increasing instructional guidance: a bare
function placeholder, a generic completion instruction, a role-based
preamble, and a structured prompt that lists code smells to avoid. The
experiment completes each smelly snippet under a baseline and a
treatment prompt, scores the target smell in the generated segment with
the median aggregate, and reports the paired distributions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .align import align, in_generated_segment
from .core import TokenTrace
from .errors import PsckitError, UnalignableError
from .inference.client import CompletionsClient
from .inference.decoding import DecodingConfig
from .psc import DEFAULT_LAMBDA, psc_median
from .smells import RuleSet, detect

DEFAULT_AVOID_LIST = ("W0719", "C0304", "W0611")


class PromptId(Enum):
    P0_MINIMAL = "p0_minimal"
    P1_GENERIC = "p1_generic"
    P2_ROLE = "p2_role"
    P3_STRUCTURED = "p3_structured"


@dataclass(frozen=True)
class PromptTemplate:
    id: PromptId
    template: str
    avoid_list: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.template.count("{snippet}") != 1:
            raise ValueError("template must contain exactly one {snippet} placeholder")
        if self.avoid_list is not None and self.id is not PromptId.P3_STRUCTURED:
            raise ValueError("avoid_list applies to the structured prompt only")


_ROLE_PREAMBLE = (
    "You are an expert software engineer committed to producing clean, "
    "maintainable, and production-quality code.\n"
)

DEFAULT_TEMPLATES: dict[PromptId, PromptTemplate] = {
    PromptId.P0_MINIMAL: PromptTemplate(PromptId.P0_MINIMAL, "{snippet}"),
    PromptId.P1_GENERIC: PromptTemplate(
        PromptId.P1_GENERIC, "Complete the following code\n{snippet}"
    ),
    PromptId.P2_ROLE: PromptTemplate(
        PromptId.P2_ROLE, _ROLE_PREAMBLE + "Complete the following code\n{snippet}"
    ),
    PromptId.P3_STRUCTURED: PromptTemplate(
        PromptId.P3_STRUCTURED,
        _ROLE_PREAMBLE
        + "Complete the following code without introducing the code smells listed "
        "below. Follow best practices for modular and readable Python: small "
        "functions, meaningful names, specific exceptions, and clean imports.\n"
        "{snippet}",
        avoid_list=DEFAULT_AVOID_LIST,
    ),
}


def render(template: PromptTemplate, snippet: str) -> str:
    """Substitute the snippet; the structured prompt interpolates its
    avoid list as a bulleted section ahead of the code."""
    if not snippet:
        raise ValueError("snippet must be non-empty")
    head, tail = template.template.split("{snippet}")
    section = ""
    if template.avoid_list:
        bullets = "".join(f"- {symbol}\n" for symbol in template.avoid_list)
        section = f"Code smells to avoid:\n{bullets}"
    return head + section + snippet + tail


@dataclass(frozen=True)
class MitigationSample:
    sample_id: str
    rule_id: str
    snippet: str


@dataclass(frozen=True)
class PairedRow:
    sample_id: str
    rule_id: str
    condition: str
    psc_median: float
    propense: bool


@dataclass(frozen=True)
class BoxStats:
    median: float
    q1: float
    q3: float
    whisker_low: float
    whisker_high: float
    n: int


@dataclass(frozen=True)
class RuleSummary:
    rule_id: str
    medians: dict[str, float]
    below_lambda: dict[str, float]
    boxes: dict[str, BoxStats]


@dataclass
class MitigationResult:
    rows: list[PairedRow] = field(default_factory=list)
    incomplete: list[tuple[str, str, str]] = field(default_factory=list)  # sample, condition, why

    def rules(self) -> list[str]:
        return sorted({r.rule_id for r in self.rows})

    def condition_scores(self, rule_id: str, condition: str) -> list[float]:
        return [
            r.psc_median
            for r in self.rows
            if r.rule_id == rule_id and r.condition == condition
        ]

    def summaries(self, lam: float = DEFAULT_LAMBDA) -> list[RuleSummary]:
        conditions = sorted({r.condition for r in self.rows})
        out = []
        for rule_id in self.rules():
            medians, below, boxes = {}, {}, {}
            for condition in conditions:
                scores = self.condition_scores(rule_id, condition)
                if not scores:
                    continue
                medians[condition] = _median(scores)
                below[condition] = sum(1 for s in scores if s < lam) / len(scores)
                boxes[condition] = box_stats(scores)
            out.append(
                RuleSummary(rule_id=rule_id, medians=medians, below_lambda=below, boxes=boxes)
            )
        return out


def _median(values: Sequence[float]) -> float:
    ordered = sorted(values)
    n = len(ordered)
    mid = n // 2
    return ordered[mid] if n % 2 else (ordered[mid - 1] + ordered[mid]) / 2.0


def _quantile(ordered: Sequence[float], q: float) -> float:
    """Linear-interpolation quantile on a pre-sorted sample."""
    if not ordered:
        raise ValueError("empty sample")
    pos = q * (len(ordered) - 1)
    lo = math.floor(pos)
    hi = math.ceil(pos)
    if lo == hi:
        return ordered[lo]
    frac = pos - lo
    return ordered[lo] * (1 - frac) + ordered[hi] * frac


def box_stats(values: Sequence[float]) -> BoxStats:
    """Median, quartiles, and whiskers at 1.5 IQR from the box edges."""
    ordered = sorted(values)
    q1 = _quantile(ordered, 0.25)
    q3 = _quantile(ordered, 0.75)
    iqr = q3 - q1
    lo_limit = q1 - 1.5 * iqr
    hi_limit = q3 + 1.5 * iqr
    inside = [v for v in ordered if lo_limit <= v <= hi_limit]
    return BoxStats(
        median=_median(ordered),
        q1=q1,
        q3=q3,
        whisker_low=inside[0] if inside else q1,
        whisker_high=inside[-1] if inside else q3,
        n=len(ordered),
    )


def score_generated_smell(
    trace: TokenTrace, rule_id: str, rules: RuleSet | None = None
) -> float | None:
    """Median score of the first target-rule smell inside the generated segment."""
    diagnostics = detect(trace.source, rules, sample_id=trace.sample_id)
    for diag in diagnostics:
        if diag.rule_id != rule_id:
            continue
        try:
            span = align(diag, trace)
        except UnalignableError:
            continue
        if not in_generated_segment(span, trace):
            continue
        return psc_median(trace, span)
    return None


def run_mitigation(
    corpus: Sequence[MitigationSample],
    baseline: PromptTemplate,
    treatment: PromptTemplate,
    config: DecodingConfig,
    client: CompletionsClient,
    lam: float = DEFAULT_LAMBDA,
    rules: RuleSet | None = None,
) -> MitigationResult:
    """Paired completion scoring under both prompt conditions.

    The two requests for one sample run sequentially so the conditions
    stay comparable; per-sample failures are recorded, not fatal. Only
    samples scored under both conditions contribute rows.
    """
    result = MitigationResult()
    conditions = (("baseline", baseline), ("treatment", treatment))
    for sample in corpus:
        scored: dict[str, float] = {}
        for name, template in conditions:
            try:
                trace = client.complete_text(
                    render(template, sample.snippet),
                    config,
                    source_prefix=sample.snippet,
                    sample_id=f"{sample.sample_id}:{name}",
                )
            except PsckitError as exc:
                result.incomplete.append((sample.sample_id, name, str(exc)))
                break
            score = score_generated_smell(trace, sample.rule_id, rules)
            if score is None:
                result.incomplete.append(
                    (sample.sample_id, name, f"no {sample.rule_id} smell in generated segment")
                )
                break
            scored[name] = score
        if len(scored) == len(conditions):
            for name, score in scored.items():
                result.rows.append(
                    PairedRow(
                        sample_id=sample.sample_id,
                        rule_id=sample.rule_id,
                        condition=name,
                        psc_median=score,
                        propense=score >= lam,
                    )
                )
    return result
