"""Backdoor-adjusted treatment effect estimation.

The effect is the coefficient of the treatment indicator in a least-
squares regression of the outcome on [indicator, standardized
confounders]; the standard error is heteroskedasticity-robust (HC1).
The correlation column is the Spearman rank correlation between the
indicator and the outcome.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from ..errors import InsufficientDataError, SingularError
from .frames import ExperimentFrame, feature_matrix, outcomes

MIN_GROUP_ROWS = 30
RIDGE_LAMBDA = 1e-8


@dataclass(frozen=True)
class Refutation:
    new_estimate: float
    passed: bool | None  # None: reported as sensitivity, not pass/fail


@dataclass(frozen=True)
class CausalResult:
    rule_id: str
    treatment_level: str
    control_level: str
    outcome: str
    rho: float
    ate: float
    se: float
    n_treatment: int
    n_control: int
    ridge_used: bool = False
    refutations: Mapping[str, Refutation] = field(default_factory=dict)

    def with_refutations(self, refutations: Mapping[str, Refutation]) -> "CausalResult":
        return CausalResult(
            rule_id=self.rule_id,
            treatment_level=self.treatment_level,
            control_level=self.control_level,
            outcome=self.outcome,
            rho=self.rho,
            ate=self.ate,
            se=self.se,
            n_treatment=self.n_treatment,
            n_control=self.n_control,
            ridge_used=self.ridge_used,
            refutations=dict(refutations),
        )

    @property
    def significant(self) -> bool:
        return abs(self.ate) > 1.96 * self.se


def rankdata(values: Sequence[float]) -> np.ndarray:
    """Average ranks, ties shared (1-based)."""
    arr = np.asarray(values, dtype=float)
    order = np.argsort(arr, kind="mergesort")
    ranks = np.empty(len(arr), dtype=float)
    sorted_vals = arr[order]
    k = 0
    while k < len(arr):
        m = k
        while m + 1 < len(arr) and sorted_vals[m + 1] == sorted_vals[k]:
            m += 1
        ranks[order[k : m + 1]] = (k + m) / 2.0 + 1.0
        k = m + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    rx, ry = rankdata(x), rankdata(y)
    sx, sy = rx.std(), ry.std()
    if sx == 0.0 or sy == 0.0:
        return 0.0
    return float(np.mean((rx - rx.mean()) * (ry - ry.mean())) / (sx * sy))


def standardize(z: np.ndarray) -> np.ndarray:
    """Zero-mean unit-variance columns; constant columns are dropped."""
    if z.size == 0:
        return z.reshape(len(z), 0)
    mean = z.mean(axis=0)
    std = z.std(axis=0)
    keep = std > 0
    if not keep.any():
        return np.empty((len(z), 0))
    return (z[:, keep] - mean[keep]) / std[keep]


@dataclass(frozen=True)
class FitResult:
    ate: float
    se: float
    ridge_used: bool


def fit_treatment_effect(
    y: np.ndarray, t: np.ndarray, z: np.ndarray, allow_ridge: bool = True
) -> FitResult:
    """OLS of y on [1, t, z] with HC1 robust se for the t coefficient."""
    n = len(y)
    x = np.column_stack([np.ones(n), t, z])
    p = x.shape[1]
    xtx = x.T @ x
    ridge_used = False
    rank = np.linalg.matrix_rank(xtx)
    if rank < p:
        if not allow_ridge:
            raise SingularError("design matrix is collinear")
        xtx = xtx + RIDGE_LAMBDA * np.trace(xtx) / p * np.eye(p)
        ridge_used = True
    xtx_inv = np.linalg.inv(xtx)
    beta = xtx_inv @ (x.T @ y)
    residuals = y - x @ beta
    meat = (x * (residuals**2)[:, None]).T @ x
    dof_scale = n / max(n - p, 1)
    cov = xtx_inv @ meat @ xtx_inv * dof_scale
    return FitResult(ate=float(beta[1]), se=float(np.sqrt(max(cov[1, 1], 0.0))), ridge_used=ridge_used)


def estimate_ate(
    frame: ExperimentFrame,
    treatment_level: str,
    control_level: str | None = None,
    outcome: str = "y1",
    rule_id: str = "",
) -> CausalResult:
    """Estimate the effect of one treatment level against the control.

    Both levels need at least 30 rows; confounders are standardized
    internally. Collinear confounders fall back to a small ridge and the
    result records that it happened.
    """
    control_level = control_level if control_level is not None else frame.control
    treat_rows = frame.level_rows(treatment_level)
    control_rows = frame.level_rows(control_level)
    if len(treat_rows) < MIN_GROUP_ROWS or len(control_rows) < MIN_GROUP_ROWS:
        raise InsufficientDataError(
            f"need >= {MIN_GROUP_ROWS} rows per level, got "
            f"{len(treat_rows)} treatment / {len(control_rows)} control"
        )
    rows = treat_rows + control_rows
    y = np.asarray(outcomes(rows, outcome))
    t = np.asarray([1.0] * len(treat_rows) + [0.0] * len(control_rows))
    z = standardize(np.asarray(feature_matrix(rows), dtype=float))
    fit = fit_treatment_effect(y, t, z)
    return CausalResult(
        rule_id=rule_id,
        treatment_level=treatment_level,
        control_level=control_level,
        outcome=outcome,
        rho=spearman(t, y),
        ate=fit.ate,
        se=fit.se,
        n_treatment=len(treat_rows),
        n_control=len(control_rows),
        ridge_used=fit.ridge_used,
    )
