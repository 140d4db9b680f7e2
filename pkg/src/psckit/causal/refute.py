"""Refutation tests probing the stability of an estimated effect.

Four checks: re-estimate with an appended random covariate, with the
treatment column permuted (placebo), with a synthetic confounder
correlated with both treatment and outcome (sensitivity, reported
without a pass flag), and the mean estimate over bootstrap subsets.
"""

from __future__ import annotations

import numpy as np

from .estimate import CausalResult, Refutation, fit_treatment_effect, standardize
from .frames import ExperimentFrame, feature_matrix, outcomes

RANDOM_COMMON_CAUSE = "random_common_cause"
PLACEBO = "placebo"
UNOBSERVED_CONFOUNDER = "unobserved_confounder"
SUBSET = "subset"

SUBSET_ROUNDS = 20
SUBSET_FRACTION = 0.8
CONFOUNDER_KAPPA = 0.3


def _zscore(v: np.ndarray) -> np.ndarray:
    sd = v.std()
    return (v - v.mean()) / sd if sd > 0 else np.zeros_like(v)


ALL_REFUTATIONS = (RANDOM_COMMON_CAUSE, PLACEBO, UNOBSERVED_CONFOUNDER, SUBSET)


def refute(
    frame: ExperimentFrame,
    result: CausalResult,
    seed: int = 0,
    kappa: float = CONFOUNDER_KAPPA,
    tests: "tuple[str, ...]" = ALL_REFUTATIONS,
) -> dict[str, Refutation]:
    """Run the requested refutation tests for a completed estimate."""
    rng = np.random.default_rng(seed)
    treat_rows = frame.level_rows(result.treatment_level)
    control_rows = frame.level_rows(result.control_level)
    rows = treat_rows + control_rows
    y = np.asarray(outcomes(rows, result.outcome))
    t = np.asarray([1.0] * len(treat_rows) + [0.0] * len(control_rows))
    z = standardize(np.asarray(feature_matrix(rows), dtype=float))
    n = len(y)

    refutations: dict[str, Refutation] = {}

    if RANDOM_COMMON_CAUSE in tests:
        # appended standard-normal covariate should not move the estimate
        z_extra = np.column_stack([z, rng.standard_normal(n)])
        rcc = fit_treatment_effect(y, t, z_extra).ate
        refutations[RANDOM_COMMON_CAUSE] = Refutation(
            new_estimate=rcc,
            passed=abs(rcc - result.ate) < 0.1 * abs(result.ate) + 0.01,
        )

    if PLACEBO in tests:
        # permuted treatment should estimate ~0
        t_perm = t[rng.permutation(n)]
        placebo = fit_treatment_effect(y, t_perm, z).ate
        refutations[PLACEBO] = Refutation(
            new_estimate=placebo,
            passed=abs(placebo) < max(0.02, 2.0 * result.se),
        )

    if UNOBSERVED_CONFOUNDER in tests:
        # synthetic confounder correlated with both T and Y: sensitivity only
        noise_scale = np.sqrt(max(1.0 - 2.0 * kappa * kappa, 0.05))
        u = kappa * _zscore(t) + kappa * _zscore(y) + noise_scale * rng.standard_normal(n)
        unobs = fit_treatment_effect(y, t, np.column_stack([z, u])).ate
        refutations[UNOBSERVED_CONFOUNDER] = Refutation(new_estimate=unobs, passed=None)

    if SUBSET in tests:
        # mean over bootstrap subsets should stay near the full estimate
        subset_size = max(int(n * SUBSET_FRACTION), 2)
        estimates = []
        for _ in range(SUBSET_ROUNDS):
            idx = rng.choice(n, size=subset_size, replace=False)
            estimates.append(fit_treatment_effect(y[idx], t[idx], z[idx]).ate)
        subset_mean = float(np.mean(estimates))
        refutations[SUBSET] = Refutation(
            new_estimate=subset_mean,
            passed=abs(subset_mean - result.ate) <= 2.0 * result.se,
        )
    return refutations
