"""Per-(rule, treatment level) effect table with refutation flags."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import InsufficientDataError
from .estimate import CausalResult, estimate_ate
from .frames import ExperimentFrame
from .refute import PLACEBO, RANDOM_COMMON_CAUSE, SUBSET, UNOBSERVED_CONFOUNDER, refute


@dataclass(frozen=True)
class CausalReportRow:
    result: CausalResult
    skipped_reason: str | None = None

    @property
    def robust(self) -> bool:
        """All pass/fail refutations passed (sensitivity entries do not count)."""
        flags = [r.passed for r in self.result.refutations.values() if r.passed is not None]
        return bool(flags) and all(flags)


def causal_report(
    frame: ExperimentFrame,
    outcome: str = "y1",
    seed: int = 0,
    per_rule: bool = True,
) -> list[CausalReportRow]:
    """Estimate and refute every non-control level, per rule by default.

    Levels or rules without enough rows are reported as skipped rather
    than aborting the whole report.
    """
    rows: list[CausalReportRow] = []
    rule_frames = (
        [(rule, frame.subset(rule)) for rule in frame.rules()] if per_rule else [("", frame)]
    )
    for rule_id, sub in rule_frames:
        for level in frame.levels:
            if level == frame.control:
                continue
            try:
                result = estimate_ate(sub, level, outcome=outcome, rule_id=rule_id)
            except InsufficientDataError as exc:
                placeholder = CausalResult(
                    rule_id=rule_id,
                    treatment_level=level,
                    control_level=frame.control,
                    outcome=outcome,
                    rho=float("nan"),
                    ate=float("nan"),
                    se=float("nan"),
                    n_treatment=len(sub.level_rows(level)),
                    n_control=len(sub.level_rows(frame.control)),
                )
                rows.append(CausalReportRow(result=placeholder, skipped_reason=str(exc)))
                continue
            result = result.with_refutations(refute(sub, result, seed=seed))
            rows.append(CausalReportRow(result=result))
    return rows


REPORT_HEADER = (
    "rule_id",
    "treatment_level",
    "control_level",
    "n_treatment",
    "n_control",
    "rho",
    "ate",
    "se",
    "significant",
    "rcc_estimate",
    "rcc_passed",
    "placebo_estimate",
    "placebo_passed",
    "unobserved_estimate",
    "subset_estimate",
    "subset_passed",
    "robust",
    "skipped",
)


def report_csv_rows(rows: Sequence[CausalReportRow]) -> list[dict[str, object]]:
    out = []
    for row in rows:
        r = row.result
        refs = r.refutations
        rec: dict[str, object] = {
            "rule_id": r.rule_id,
            "treatment_level": r.treatment_level,
            "control_level": r.control_level,
            "n_treatment": r.n_treatment,
            "n_control": r.n_control,
            "rho": r.rho,
            "ate": r.ate,
            "se": r.se,
            "significant": int(r.significant) if not row.skipped_reason else "",
            "rcc_estimate": refs[RANDOM_COMMON_CAUSE].new_estimate if refs else "",
            "rcc_passed": int(bool(refs[RANDOM_COMMON_CAUSE].passed)) if refs else "",
            "placebo_estimate": refs[PLACEBO].new_estimate if refs else "",
            "placebo_passed": int(bool(refs[PLACEBO].passed)) if refs else "",
            "unobserved_estimate": refs[UNOBSERVED_CONFOUNDER].new_estimate if refs else "",
            "subset_estimate": refs[SUBSET].new_estimate if refs else "",
            "subset_passed": int(bool(refs[SUBSET].passed)) if refs else "",
            "robust": int(row.robust) if refs else "",
            "skipped": row.skipped_reason or "",
        }
        out.append(rec)
    return out
