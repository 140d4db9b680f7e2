import math
import random

import pytest

from psckit.core import SeverityLabel, SmellDiagnostic
from psckit.errors import DegenerateError
from psckit.infogain import (
    SeverityDataset,
    bleu,
    ig_report,
    information_gain,
    label_entropy_bits,
    label_severity,
)

from conftest import make_trace

H, L = SeverityLabel.HIGH, SeverityLabel.LOW


def _diag(line, col, end_line, end_col, rule="W0001"):
    return SmellDiagnostic(
        sample_id="t", rule_id=rule, symbol="x",
        start_line=line, start_col=col, end_line=end_line, end_col=end_col,
    )


# -- severity ---------------------------------------------------------------


def test_label_severity_majority_boundary():
    trace = make_trace("0123456789", [1] * 10)
    six = label_severity(trace, [_diag(1, 0, 1, 6)])
    assert six == (6, 10, H)
    five = label_severity(trace, [_diag(1, 0, 1, 5)])
    assert five == (5, 10, L)  # strict inequality at one half


def test_label_severity_no_diagnostics():
    trace = make_trace("0123456789", [1] * 10)
    assert label_severity(trace, []) == (0, 10, L)


def test_label_severity_overlaps_count_once():
    trace = make_trace("0123456789", [1] * 10)
    n_s, n_t, _ = label_severity(
        trace, [_diag(1, 0, 1, 4), _diag(1, 2, 1, 6, rule="W0002")]
    )
    assert (n_s, n_t) == (6, 10)


# -- information gain ----------------------------------------------------------


def test_perfect_separation_is_one_bit():
    labels = [H] * 5 + [L] * 5
    scores = [0.9] * 5 + [0.1] * 5
    assert information_gain(labels, scores) == pytest.approx(1.0, abs=1e-12)


def test_constant_scores_zero_gain():
    labels = [H] * 5 + [L] * 5
    assert information_gain(labels, [0.5] * 10) == 0.0


def test_two_bins_four_to_one_purity():
    labels = [H, H, H, H, L, L, L, L, L, H]
    scores = [0.9] * 5 + [0.1] * 5
    expected = 1 - (-(0.8 * math.log2(0.8) + 0.2 * math.log2(0.2)))
    assert information_gain(labels, scores, bins=2) == pytest.approx(expected, abs=1e-12)


def test_single_class_defined_as_zero():
    assert information_gain([H, H, H], [0.1, 0.5, 0.9]) == 0.0


def test_length_mismatch_rejected():
    with pytest.raises(DegenerateError):
        information_gain([H, L], [0.1])


def test_gain_bounded_by_label_entropy(rng: random.Random):
    for _ in range(100):
        n = rng.randint(2, 60)
        labels = [rng.choice([H, L]) for _ in range(n)]
        scores = [rng.random() for _ in range(n)]
        gain = information_gain(labels, scores)
        assert -1e-12 <= gain <= label_entropy_bits(labels) + 1e-12


def test_monotone_invariance(rng: random.Random):
    maps = [
        math.exp,
        lambda x: x**3 + 7,
        lambda x: math.atan(x) * 3,
        lambda x: 10 * x - 2,
        math.sqrt,
    ]
    for _ in range(100):
        n = rng.randint(4, 50)
        labels = [rng.choice([H, L]) for _ in range(n)]
        scores = [rng.choice([0.1, 0.3, 0.35, rng.random(), 0.9]) for _ in range(n)]
        base = information_gain(labels, scores)
        f = rng.choice(maps)
        assert information_gain(labels, [f(s) for s in scores]) == base


# -- BLEU ------------------------------------------------------------------


def test_bleu_identity():
    tokens = "def f ( x ) : return x".split()
    assert bleu(tokens, tokens) == pytest.approx(1.0, abs=1e-12)


def test_bleu_disjoint_zero():
    assert bleu("x y z".split(), "a b c".split()) == 0.0


def test_bleu_brevity_penalty():
    candidate = "a b c d".split()
    reference = "a b c d e f g h".split()
    assert bleu(candidate, reference) == pytest.approx(math.exp(1 - 2), abs=1e-12)


def test_bleu_empty_candidate_and_reference():
    assert bleu([], ["a"]) == 0.0
    with pytest.raises(ValueError):
        bleu(["a"], [])


def test_bleu_partial_overlap_strictly_between_extremes():
    partial = bleu("a q r s".split(), "a b c d".split())
    assert 0.0 < partial < 1.0
    more_overlap = bleu("a b r s".split(), "a b c d".split())
    assert partial < more_overlap < 1.0


# -- report -----------------------------------------------------------------


def _dataset(rng: random.Random, correlated: bool, n=120) -> SeverityDataset:
    ds = SeverityDataset()
    for k in range(n):
        n_t = 10
        n_s = rng.randint(6, 10) if k % 2 == 0 else rng.randint(0, 5)
        severity_high = n_s / n_t > 0.5
        metric_a = (0.7 if severity_high else 0.3) + rng.gauss(0, 0.05) if correlated else rng.random()
        ds.add(f"s{k}", "R1", n_s, n_t, {"metric_a": metric_a, "noise": rng.random()})
    return ds


def test_ig_report_correlated_metric_beats_noise():
    rng = random.Random(1234)
    wins = 0
    for trial in range(25):
        ds = _dataset(random.Random(trial), correlated=True)
        rows = {r.metric: r.ig_bits for r in ig_report(ds, ["metric_a", "noise"])}
        wins += rows["metric_a"] > rows["noise"]
    assert wins >= 24


def test_ig_report_identical_columns_equal():
    rng = random.Random(5)
    ds = SeverityDataset()
    for k in range(40):
        n_s = rng.randint(0, 10)
        v = rng.random()
        ds.add(f"s{k}", "R1", n_s, 10, {"a": v, "b": v})
    rows = {r.metric: r.ig_bits for r in ig_report(ds, ["a", "b"])}
    assert rows["a"] == rows["b"]


def test_ig_report_small_rule_omitted_with_warning():
    ds = SeverityDataset()
    ds.add("s0", "tiny", 9, 10, {"a": 0.5})
    warnings: list[str] = []
    rows = ig_report(ds, ["a"], warn=warnings)
    assert rows == []
    assert warnings and "tiny" in warnings[0]


def test_ig_report_missing_metric_column():
    ds = SeverityDataset()
    ds.add("s0", "R1", 9, 10, {"a": 0.5})
    ds.add("s1", "R1", 1, 10, {"a": 0.4})
    with pytest.raises(KeyError):
        ig_report(ds, ["missing"])


def test_severity_dataset_invariant():
    ds = SeverityDataset()
    with pytest.raises(ValueError):
        ds.add("s0", "R1", 11, 10, {})
    ds.add("s1", "R1", 6, 10, {})
    assert ds.rows[0].severity is H
