"""One-way ANOVA over logit-transformed relative scores, per smell type.

The report mirrors the robustness protocol: scores are logit-transformed
to improve normality, groups are the transformation variants, and a rule
is flagged non-robust when the p-value is below .05 with an effect size
of at least 0.1. Confidence intervals use the large-sample normal
approximation by default; a t-based variant is available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from ..errors import DegenerateError
from .special import f_sf, t_ppf

LOGIT_CLAMP_DELTA = 1e-6
NON_ROBUST_P = 0.05
NON_ROBUST_ETA2 = 0.1
Z_95 = 1.96


def logit(p: float, clamp_delta: float = LOGIT_CLAMP_DELTA) -> float:
    """ln(p / (1-p)) with clamping that removes the endpoint singularities."""
    if math.isnan(p) or math.isinf(p):
        raise ValueError(f"logit of non-finite value {p!r}")
    p = min(max(p, clamp_delta), 1.0 - clamp_delta)
    return math.log(p / (1.0 - p))


@dataclass(frozen=True)
class AnovaResult:
    rule_id: str
    f_stat: float
    p_value: float
    eta_squared: float
    ci95: tuple[float, float]  # (mean, half_width)
    group_sizes: tuple[int, ...]
    ss_between: float
    ss_within: float


def ci95(sample: Sequence[float], use_t: bool = False) -> tuple[float, float]:
    """(mean, half-width) of the 95% interval for the sample mean."""
    n = len(sample)
    if n < 2:
        raise DegenerateError("confidence interval needs at least 2 observations")
    mean = sum(sample) / n
    var = sum((x - mean) ** 2 for x in sample) / (n - 1)
    sd = math.sqrt(var)
    quantile = t_ppf(0.975, n - 1) if use_t else Z_95
    return mean, quantile * sd / math.sqrt(n)


def one_way_anova(
    groups: Sequence[Sequence[float]],
    rule_id: str = "",
    ci_values: Sequence[float] | None = None,
    use_t_ci: bool = False,
) -> AnovaResult:
    """F, p, and eta-squared from the between/within sum-of-squares split.

    All-identical data is not an error: the 0/0 ratio is defined as 0,
    giving F=0, p=1, eta2=0. The interval defaults to the pooled input
    values; pass ci_values to report it on another scale.
    """
    if len(groups) < 2:
        raise DegenerateError("ANOVA needs at least 2 groups")
    for g in groups:
        if len(g) < 2:
            raise DegenerateError("every ANOVA group needs at least 2 observations")

    sizes = tuple(len(g) for g in groups)
    n_total = sum(sizes)
    k = len(groups)
    means = [sum(g) / len(g) for g in groups]
    grand = sum(sum(g) for g in groups) / n_total

    if all(m == means[0] for m in means):
        ss_between = 0.0
    else:
        ss_between = sum(n * (m - grand) ** 2 for n, m in zip(sizes, means))
    ss_within = sum(
        sum((x - m) ** 2 for x in g) for g, m in zip(groups, means)
    )

    df_between = k - 1
    df_within = n_total - k
    if ss_between == 0.0:
        f_stat = 0.0
    elif ss_within == 0.0:
        f_stat = math.inf
    else:
        f_stat = (ss_between / df_between) / (ss_within / df_within)
    p_value = f_sf(f_stat, df_between, df_within)
    denom = ss_between + ss_within
    eta_squared = 0.0 if denom == 0.0 else ss_between / denom

    pooled = list(ci_values) if ci_values is not None else [x for g in groups for x in g]
    return AnovaResult(
        rule_id=rule_id,
        f_stat=f_stat,
        p_value=p_value,
        eta_squared=eta_squared,
        ci95=ci95(pooled, use_t=use_t_ci),
        group_sizes=sizes,
        ss_between=ss_between,
        ss_within=ss_within,
    )


@dataclass(frozen=True)
class RobustnessRow:
    anova: AnovaResult
    variants: tuple[str, ...]

    @property
    def robust(self) -> bool:
        return not (
            self.anova.p_value < NON_ROBUST_P and self.anova.eta_squared >= NON_ROBUST_ETA2
        )


def robustness_report(
    scores: Mapping[str, Mapping[str, Sequence[float]]],
    clamp_delta: float = LOGIT_CLAMP_DELTA,
    use_t_ci: bool = False,
    warn: "list[str] | None" = None,
) -> list[RobustnessRow]:
    """One ANOVA per rule over logit scores, grouped by transformation variant.

    scores maps rule_id -> variant name -> raw relative scores. Variants
    with fewer than 2 observations are dropped (the group_sizes field
    records the subset actually analyzed); rules left with fewer than 2
    usable variants are skipped with a warning. Intervals stay on the raw
    score scale.
    """
    rows = []
    for rule_id in sorted(scores):
        variants = {
            name: list(values)
            for name, values in scores[rule_id].items()
            if len(values) >= 2
        }
        if len(variants) < 2:
            message = f"rule {rule_id}: needs at least 2 variant groups with 2+ scores, skipped"
            if warn is None:
                raise DegenerateError(message)
            warn.append(message)
            continue
        names = sorted(variants)
        groups = [[logit(x, clamp_delta) for x in variants[name]] for name in names]
        raw_pooled = [x for name in names for x in variants[name]]
        result = one_way_anova(
            groups, rule_id=rule_id, ci_values=raw_pooled, use_t_ci=use_t_ci
        )
        rows.append(RobustnessRow(anova=result, variants=tuple(names)))
    return rows


def robustness_csv_rows(rows: Sequence[RobustnessRow]) -> list[dict[str, object]]:
    return [
        {
            "rule_id": row.anova.rule_id,
            "F": row.anova.f_stat,
            "p": row.anova.p_value,
            "eta2": row.anova.eta_squared,
            "ci_mean": row.anova.ci95[0],
            "ci_half_width": row.anova.ci95[1],
            "robust_flag": int(row.robust),
        }
        for row in rows
    ]
