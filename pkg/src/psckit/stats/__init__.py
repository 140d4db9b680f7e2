"""Statistical machinery: ANOVA robustness protocol and special functions."""

from .anova import (
    AnovaResult,
    RobustnessRow,
    ci95,
    logit,
    one_way_anova,
    robustness_csv_rows,
    robustness_report,
)
from .special import betainc, f_sf, t_cdf, t_ppf

__all__ = [
    "AnovaResult",
    "RobustnessRow",
    "betainc",
    "ci95",
    "f_sf",
    "logit",
    "one_way_anova",
    "robustness_csv_rows",
    "robustness_report",
    "t_cdf",
    "t_ppf",
]
