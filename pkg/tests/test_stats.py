import math
import random

import pytest

from psckit.errors import DegenerateError
from psckit.stats import (
    AnovaResult,
    betainc,
    ci95,
    f_sf,
    logit,
    one_way_anova,
    robustness_report,
    t_cdf,
    t_ppf,
)

# -- definitional sum-of-squares oracle, written from the formulas ------------


def oracle_anova(groups):
    k = len(groups)
    n = sum(len(g) for g in groups)
    grand = sum(sum(g) for g in groups) / n
    means = [sum(g) / len(g) for g in groups]
    ssb = sum(len(g) * (m - grand) ** 2 for g, m in zip(groups, means))
    ssw = sum(sum((x - m) ** 2 for x in g) for g, m in zip(groups, means))
    if ssb == 0:
        return 0.0, ssb, ssw
    f = (ssb / (k - 1)) / (ssw / (n - k))
    return f, ssb, ssw


def test_logit_examples():
    assert logit(0.5) == 0.0
    delta = 1e-6
    assert logit(1.0) == pytest.approx(math.log((1 - delta) / delta), abs=1e-7)
    rng = random.Random(3)
    for _ in range(50):
        p = rng.uniform(0.01, 0.99)
        assert logit(p) == pytest.approx(-logit(1 - p), abs=1e-9)


def test_logit_clamps_out_of_range():
    assert logit(0.0) == pytest.approx(-logit(1.0), abs=1e-9)
    assert logit(-0.5) == logit(0.0)
    assert math.isfinite(logit(1.2))


def test_anova_worked_example():
    result = one_way_anova([[1, 2, 3], [2, 3, 4], [3, 4, 5]])
    assert result.f_stat == pytest.approx(3.0, abs=1e-12)
    assert result.eta_squared == pytest.approx(0.5, abs=1e-12)


def test_anova_identical_groups_exact_zero_pattern():
    result = one_way_anova([[0.2, 0.4, 0.6]] * 3)
    assert (result.f_stat, result.p_value, result.eta_squared) == (0.0, 1.0, 0.0)


def test_anova_all_identical_data_zero_over_zero_convention():
    result = one_way_anova([[0.3, 0.3], [0.3, 0.3]])
    assert (result.f_stat, result.p_value, result.eta_squared) == (0.0, 1.0, 0.0)


def test_anova_two_groups_equals_t_squared():
    scipy_stats = pytest.importorskip("scipy.stats")
    rng = random.Random(5)
    for _ in range(20):
        a = [rng.gauss(0, 1) for _ in range(rng.randint(3, 30))]
        b = [rng.gauss(rng.uniform(-1, 1), 1) for _ in range(rng.randint(3, 30))]
        t_stat, _ = scipy_stats.ttest_ind(a, b)
        result = one_way_anova([a, b])
        assert result.f_stat == pytest.approx(t_stat * t_stat, rel=1e-9)


def test_anova_matches_oracle_on_random_group_sets():
    rng = random.Random(99)
    for _ in range(100):
        groups = [
            [rng.uniform(-3, 3) for _ in range(rng.randint(2, 12))]
            for _ in range(rng.randint(2, 6))
        ]
        result = one_way_anova(groups)
        f, ssb, ssw = oracle_anova(groups)
        assert result.f_stat == pytest.approx(f, rel=1e-9, abs=1e-9)
        assert result.ss_between == pytest.approx(ssb, rel=1e-9, abs=1e-12)
        assert result.ss_within == pytest.approx(ssw, rel=1e-9, abs=1e-12)
        denom = ssb + ssw
        expected_eta = 0.0 if denom == 0 else ssb / denom
        assert result.eta_squared == pytest.approx(expected_eta, abs=1e-12)
        assert 0.0 <= result.eta_squared <= 1.0


def test_anova_degenerate_inputs():
    with pytest.raises(DegenerateError):
        one_way_anova([[1.0, 2.0]])
    with pytest.raises(DegenerateError):
        one_way_anova([[1.0], [2.0, 3.0]])


def test_eta_squared_recomputable_from_stored_sums():
    result = one_way_anova([[1, 2, 5], [4, 4, 4], [0, 1, 9]])
    recomputed = result.ss_between / (result.ss_between + result.ss_within)
    assert result.eta_squared == pytest.approx(recomputed, abs=1e-15)


def test_f_sf_against_quadrature_oracle():
    """High-precision numerical integration of the F density (mpmath)."""
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 40

    def oracle_sf(f, d1, d2):
        def dens(x):
            num = (
                mp.mpf(d1 / 2) * mp.log(mp.mpf(d1) / d2)
                + (mp.mpf(d1) / 2 - 1) * mp.log(x)
                - (mp.mpf(d1 + d2) / 2) * mp.log(1 + mp.mpf(d1) / d2 * x)
            )
            return mp.e ** (num - mp.log(mp.beta(mp.mpf(d1) / 2, mp.mpf(d2) / 2)))

        return float(mp.quad(dens, [f, mp.inf]))

    cases = [
        (0.5, 1, 1), (1.0, 2, 2), (2.5, 2, 10), (3.0, 2, 6), (0.1, 3, 3),
        (4.0, 4, 20), (1.5, 6, 993), (10.0, 3, 50), (0.9, 5, 5), (7.7, 1, 30),
        (2.0, 10, 10), (0.05, 8, 4), (55.0, 6, 3494), (12.5, 2, 2), (1.0, 100, 100),
        (3.3, 7, 13), (0.75, 12, 40), (20.0, 4, 8), (5.5, 9, 60), (2.2, 15, 200),
    ]
    for f, d1, d2 in cases:
        expected = oracle_sf(f, d1, d2)
        assert f_sf(f, d1, d2) == pytest.approx(expected, abs=1e-9), (f, d1, d2)


def test_f_sf_edges():
    assert f_sf(0.0, 3, 5) == 1.0
    assert f_sf(math.inf, 3, 5) == 0.0


def test_betainc_bounds_and_symmetry():
    rng = random.Random(2)
    for _ in range(50):
        a, b = rng.uniform(0.5, 20), rng.uniform(0.5, 20)
        x = rng.random()
        v = betainc(a, b, x)
        assert 0.0 <= v <= 1.0
        assert v == pytest.approx(1.0 - betainc(b, a, 1.0 - x), abs=1e-12)


def test_ci95_examples():
    mean, half = ci95([0.3, 0.3, 0.3])
    assert (mean, half) == (0.3, 0.0)
    sample = [0.1, 0.2, 0.3, 0.4]
    m1, h1 = ci95(sample)
    m2, h2 = ci95([2 * v for v in sample])
    assert m2 == pytest.approx(2 * m1, abs=1e-12)
    assert h2 == pytest.approx(2 * h1, abs=1e-12)
    with pytest.raises(DegenerateError):
        ci95([1.0])


def test_ci95_format_matches_report_style():
    # 0.04 +/- 0.003 style: mean and half-width computable at report precision
    rng = random.Random(8)
    sample = [rng.gauss(0.04, 0.02) for _ in range(200)]
    mean, half = ci95(sample)
    assert f"{mean:.2f} ± {half:.3f}".count("±") == 1
    assert half == pytest.approx(1.96 * _sd(sample) / math.sqrt(len(sample)), rel=1e-12)


def _sd(sample):
    m = sum(sample) / len(sample)
    return math.sqrt(sum((x - m) ** 2 for x in sample) / (len(sample) - 1))


def test_ci95_t_variant_wider_for_small_n():
    sample = [0.1, 0.5, 0.3, 0.9]
    _, half_z = ci95(sample)
    _, half_t = ci95(sample, use_t=True)
    assert half_t > half_z


def test_t_ppf_round_trip():
    for df in (3, 10, 120):
        for q in (0.6, 0.9, 0.975):
            assert t_cdf(t_ppf(q, df), df) == pytest.approx(q, abs=1e-9)


def test_robustness_report_flags_shifted_variant():
    rng = random.Random(42)
    base = {f"v{k}": [rng.uniform(0.4, 0.6) for _ in range(80)] for k in range(7)}
    shifted = {name: list(values) for name, values in base.items()}
    shifted["v6"] = [min(v + 0.3, 0.999) for v in shifted["v6"]]  # ~ +2 sigma shift

    stable_rows = robustness_report({"R_stable": base})
    assert stable_rows[0].robust

    rows = robustness_report({"R_shifted": shifted})
    assert not rows[0].robust
    assert rows[0].anova.p_value < 0.05
    assert rows[0].anova.eta_squared >= 0.1


def test_robustness_report_notes_subset_in_group_sizes():
    rng = random.Random(1)
    scores = {
        "R1": {
            "original": [rng.random() for _ in range(10)],
            "only_other": [rng.random() for _ in range(10)],
            "too_small": [0.5],
        }
    }
    [row] = robustness_report(scores)
    assert row.variants == ("only_other", "original")
    assert row.anova.group_sizes == (10, 10)


def test_robustness_identical_variants_all_robust():
    values = [0.2, 0.4, 0.6, 0.8]
    rows = robustness_report({"R1": {f"v{k}": list(values) for k in range(7)}})
    assert rows[0].robust
    assert rows[0].anova.f_stat == 0.0
    assert rows[0].anova.p_value == 1.0


def test_anova_result_is_frozen():
    result = one_way_anova([[1, 2], [3, 4]])
    assert isinstance(result, AnovaResult)
    with pytest.raises(AttributeError):
        result.f_stat = 1.0


def test_robustness_report_skips_unanalyzable_rule_with_warning():
    scores = {"lonely": {"original": [0.5]}, "fine": {"a": [0.1, 0.2], "b": [0.1, 0.3]}}
    warnings = []
    rows = robustness_report(scores, warn=warnings)
    assert [r.anova.rule_id for r in rows] == ["fine"]
    assert warnings and "lonely" in warnings[0]
    with pytest.raises(DegenerateError):
        robustness_report({"lonely": {"original": [0.5]}})
