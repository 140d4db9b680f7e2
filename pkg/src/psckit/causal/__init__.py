"""Causal analysis: confounders, backdoor-adjusted effects, refutations."""

from .estimate import CausalResult, Refutation, estimate_ate, rankdata, spearman
from .features import FEATURE_COLUMNS, POS_CATEGORIES, FeatureVector, extract_features, load_pos_annotations
from .frames import ExperimentFrame, FrameRow, read_frame_csv, write_frame_csv
from .refute import (
    PLACEBO,
    RANDOM_COMMON_CAUSE,
    SUBSET,
    UNOBSERVED_CONFOUNDER,
    refute,
)
from .report import CausalReportRow, REPORT_HEADER, causal_report, report_csv_rows

__all__ = [
    "CausalReportRow",
    "CausalResult",
    "ExperimentFrame",
    "FEATURE_COLUMNS",
    "FeatureVector",
    "FrameRow",
    "PLACEBO",
    "POS_CATEGORIES",
    "RANDOM_COMMON_CAUSE",
    "REPORT_HEADER",
    "Refutation",
    "SUBSET",
    "UNOBSERVED_CONFOUNDER",
    "causal_report",
    "estimate_ate",
    "extract_features",
    "load_pos_annotations",
    "rankdata",
    "read_frame_csv",
    "refute",
    "report_csv_rows",
    "spearman",
    "write_frame_csv",
]
