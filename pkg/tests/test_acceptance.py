"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every criterion runs hermetically against bundled data and the stub
endpoint, at the stated tolerance, with its runtime budget enforced.
"""

from __future__ import annotations

import ast
import csv
import json
import math
import random
import time
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from psckit import psc
from psckit.align import Coverage, TokenSpan, align, diagnostic_byte_range
from psckit.causal import (
    ExperimentFrame,
    FeatureVector,
    FrameRow,
    PLACEBO,
    RANDOM_COMMON_CAUSE,
    estimate_ate,
    refute,
)
from psckit.cli import main
from psckit.core import SeverityLabel, SmellDiagnostic
from psckit.corpus import CorpusFilter, CorpusSample, filter_corpus
from psckit.errors import UnalignableError
from psckit.infogain import information_gain, label_entropy_bits
from psckit.inference import StubServer
from psckit.inference.stub import mitigation_stub_behavior, simple_tokenize
from psckit.psc.bounds import ReferenceBounds
from psckit.smells import RULE_SYMBOLS, detect
from psckit.stats import one_way_anova
from psckit.transforms import CallSpec, TransformKind, check_equivalence, transform

from conftest import DATA, make_trace, random_trace


def _report(name: str, elapsed: float, budget: float) -> None:
    print(f"ACCEPTANCE {name}: PASS ({elapsed:.2f}s < {budget:.0f}s budget)")
    assert elapsed < budget, f"{name} exceeded its {budget}s runtime budget"


# -- 1: PSC aggregators vs brute-force oracle -----------------------------------


def test_criterion_1_psc_aggregators_match_oracle():
    start = time.perf_counter()
    rng = random.Random(1001)
    for _ in range(1000):
        trace = random_trace(rng)
        n = len(trace.tokens)
        i = rng.randrange(n)
        j = rng.randrange(i, n)
        span = TokenSpan(i, j, Coverage.EXACT)
        probs = [t.prob for t in trace.tokens[i : j + 1]]

        # independent oracle: direct summation / sorting / rescale loop
        mean_oracle = sum(probs) / len(probs)
        ordered = sorted(probs)
        m = len(ordered)
        median_oracle = ordered[m // 2] if m % 2 else (ordered[m // 2 - 1] + ordered[m // 2]) / 2
        mins = [max(p - 0.25, 0.0) for p in probs]
        maxs = [min(p + 0.25, 1.0) for p in probs]
        eps = 1e-9
        rel_oracle = sum(
            (p - lo) / (hi - lo + eps) for p, lo, hi in zip(probs, mins, maxs)
        ) / len(probs)

        bounds = ReferenceBounds(offsets=tuple(zip(mins, maxs)), epsilon=eps)
        assert abs(psc.psc_mean(trace, span) - mean_oracle) < 1e-12
        assert abs(psc.psc_median(trace, span) - median_oracle) < 1e-12
        assert abs(psc.psc_relative(trace, span, bounds) - rel_oracle) < 1e-12

        # permutation invariance of mean/median on this span
        perm = probs[:]
        rng.shuffle(perm)
        t2 = make_trace("x" * len(perm), [1] * len(perm), perm)
        s2 = TokenSpan(0, len(perm) - 1, Coverage.EXACT)
        assert abs(psc.psc_mean(t2, s2) - mean_oracle) < 1e-12
        assert abs(psc.psc_median(t2, s2) - median_oracle) < 1e-12

        # bounds degeneracy: collapsed range scores 0 via epsilon
        degenerate = ReferenceBounds(offsets=tuple((p, p) for p in probs), epsilon=eps)
        assert abs(psc.psc_relative(trace, span, degenerate)) < 1e-12
    _report("1 psc-aggregators", time.perf_counter() - start, 5.0)


# -- 2: transformations parse and preserve behavior ------------------------------


def test_criterion_2_transformations_on_bundled_corpus():
    start = time.perf_counter()
    base = DATA / "sect"
    harness = json.loads((base / "harness.json").read_text())
    snippets = sorted((base / "snippets").glob("*.py"))
    assert len(snippets) >= 100, "bundled corpus must hold at least 100 snippets"

    for path in snippets:
        source = path.read_text()
        calls = [CallSpec.from_record(c) for c in harness[path.stem]]
        for kind in TransformKind:
            out, _ = transform(source, kind)
            ast.parse(out)  # 100% of outputs parse
            report = check_equivalence(source, out, calls)
            assert report.equivalent, (path.stem, kind.value, report.failures())

    # the four printed reference rewrites, byte-exact
    assert transform("a += 9", TransformKind.ADD_TO_EQUAL)[0] == "a = a + 9"
    assert transform("a == b", TransformKind.SWITCH_EQUAL_EXP)[0] == "b == a"
    assert transform("a > b", TransformKind.SWITCH_RELATION)[0] == "b < a"
    assert (
        transform("x = a + b * c", TransformKind.INFIX_DIVIDING)[0]
        == "temp = b * c\nx = a + temp"
    )
    _report("2 transformations", time.perf_counter() - start, 30.0)


# -- 3: ANOVA vs definitional oracle ---------------------------------------------


def test_criterion_3_anova_matches_definitional_oracle():
    scipy_stats = pytest.importorskip("scipy.stats")
    start = time.perf_counter()
    rng = random.Random(3003)
    for _ in range(100):
        groups = [
            [rng.uniform(-5, 5) for _ in range(rng.randint(2, 15))]
            for _ in range(rng.randint(2, 7))
        ]
        result = one_way_anova(groups)
        # definitional sum-of-squares computation
        k = len(groups)
        n = sum(len(g) for g in groups)
        grand = sum(sum(g) for g in groups) / n
        means = [sum(g) / len(g) for g in groups]
        ssb = sum(len(g) * (mu - grand) ** 2 for g, mu in zip(groups, means))
        ssw = sum(sum((x - mu) ** 2 for x in g) for g, mu in zip(groups, means))
        f_oracle = 0.0 if ssb == 0 else (ssb / (k - 1)) / (ssw / (n - k))
        eta_oracle = 0.0 if ssb + ssw == 0 else ssb / (ssb + ssw)
        assert abs(result.f_stat - f_oracle) < 1e-9 * max(1.0, abs(f_oracle))
        assert abs(result.eta_squared - eta_oracle) < 1e-9

    # identical groups: the exact zero pattern
    result = one_way_anova([[0.2, 0.4, 0.6]] * 3)
    assert (result.f_stat, result.p_value, result.eta_squared) == (0.0, 1.0, 0.0)

    # two groups: F equals the squared t statistic
    for _ in range(20):
        a = [rng.gauss(0, 1) for _ in range(rng.randint(3, 25))]
        b = [rng.gauss(0.4, 1.3) for _ in range(rng.randint(3, 25))]
        t_stat, p_t = scipy_stats.ttest_ind(a, b)
        result = one_way_anova([a, b])
        assert abs(result.f_stat - t_stat**2) < 1e-9 * max(1.0, t_stat**2)
        assert abs(result.p_value - p_t) < 1e-9
    _report("3 anova", time.perf_counter() - start, 5.0)


# -- 4: information gain ----------------------------------------------------------


def test_criterion_4_information_gain():
    start = time.perf_counter()
    H, L = SeverityLabel.HIGH, SeverityLabel.LOW
    rng = random.Random(4004)

    # perfect separation reaches the label entropy exactly (class blocks
    # sized to whole equal-frequency bins, so every bin is pure)
    for n_high, n_low in [(5, 5), (30, 30), (20, 80)]:
        labels = [H] * n_high + [L] * n_low
        scores = [0.9 + 0.001 * k for k in range(n_high)] + [
            0.1 - 0.001 * k for k in range(n_low)
        ]
        assert abs(information_gain(labels, scores) - label_entropy_bits(labels)) < 1e-12

    # invariance under 100 random strictly monotone maps
    labels = [rng.choice([H, L]) for _ in range(80)]
    scores = [rng.choice([0.12, 0.3, 0.44, rng.random()]) for _ in range(80)]
    base = information_gain(labels, scores)
    for _ in range(100):
        a = rng.uniform(0.1, 5.0)
        b = rng.uniform(-2.0, 2.0)
        c = rng.choice([1, 3, 5])
        mapped = [a * (s**c) + b for s in scores]
        assert information_gain(labels, mapped) == base

    # severity-correlated metric beats noise in >= 95/100 seeded trials
    wins = 0
    for trial in range(100):
        trial_rng = random.Random(44000 + trial)
        labels, corr, noise = [], [], []
        for _ in range(150):
            high = trial_rng.random() < 0.5
            labels.append(H if high else L)
            corr.append((0.7 if high else 0.3) + trial_rng.gauss(0, 0.08))
            noise.append(trial_rng.random())
        wins += information_gain(labels, corr) > information_gain(labels, noise)
    assert wins >= 95, f"correlated metric won only {wins}/100 trials"
    _report("4 information-gain", time.perf_counter() - start, 10.0)


# -- 5: causal recovery -------------------------------------------------------------


def _planted_frame(rng: np.random.Generator, n: int, effect: float) -> ExperimentFrame:
    z = rng.standard_normal(n)
    t = (rng.random(n) < 1.0 / (1.0 + np.exp(-z))).astype(float)
    y = effect * t + 0.5 * z + 0.1 * rng.standard_normal(n)
    token_counts = np.maximum((1000 + 100 * z).astype(int), 0)
    frame = ExperimentFrame(treatment="t1", levels=("control", "treat"), control="control")
    frame.rows = [
        FrameRow(
            sample_id=f"s{k}",
            rule_id="R",
            treatment_level="treat" if t[k] else "control",
            outcome_y1=float(y[k]),
            outcome_y0=0.0,
            features=FeatureVector(
                loc=1,
                token_count=int(token_counts[k]),
                ast_nodes=3,
                identifiers=1,
                ast_height=2,
                syntax_errors=0,
                whitespace_count=2,
                word_count=3,
                vocab_size=3,
                pos_counts={},
            ),
        )
        for k in range(n)
    ]
    return frame


def test_criterion_5_causal_recovery():
    start = time.perf_counter()
    n, seeds = 10_000, 50
    effect_estimates, null_estimates = [], []
    placebo_ok = rcc_ok = 0
    for seed in range(seeds):
        rng = np.random.default_rng(50_000 + seed)
        frame = _planted_frame(rng, n, effect=0.3)
        result = estimate_ate(frame, "treat", rule_id="R")
        effect_estimates.append(result.ate)
        refs = refute(frame, result, seed=seed, tests=(RANDOM_COMMON_CAUSE, PLACEBO))
        placebo_ok += abs(refs[PLACEBO].new_estimate) < 0.02
        rcc_ok += abs(refs[RANDOM_COMMON_CAUSE].new_estimate - result.ate) < 0.01

        null_rng = np.random.default_rng(90_000 + seed)
        null_frame = _planted_frame(null_rng, n, effect=0.0)
        null_estimates.append(estimate_ate(null_frame, "treat").ate)

    mean_effect = float(np.mean(effect_estimates))
    mean_null = float(np.mean(null_estimates))
    assert abs(mean_effect - 0.3) < 0.02, f"mean ATE {mean_effect}"
    assert abs(mean_null) < 0.02, f"mean null ATE {mean_null}"
    assert placebo_ok >= 48, f"placebo held in {placebo_ok}/50 seeds"
    assert rcc_ok >= 48, f"random-common-cause held in {rcc_ok}/50 seeds"
    _report("5 causal-recovery", time.perf_counter() - start, 60.0)


# -- 6: detector agreement with committed goldens -----------------------------------


def _match_key(d: SmellDiagnostic) -> tuple:
    return (d.sample_id, d.rule_id, d.start_line, d.start_col)


def test_criterion_6_detector_agreement_and_alignment_minimality():
    start = time.perf_counter()
    snippets = sorted((DATA / "golden" / "snippets").glob("*.py"))
    assert len(snippets) == 50

    native: list[SmellDiagnostic] = []
    golden: list[SmellDiagnostic] = []
    sources: dict[str, str] = {}
    for path in snippets:
        source = path.read_text()
        sources[path.stem] = source
        native.extend(detect(source, sample_id=path.stem))
        record = json.loads((DATA / "golden" / "diagnostics" / f"{path.stem}.json").read_text())
        for smell in record["smells"]:
            golden.append(
                SmellDiagnostic(
                    sample_id=path.stem,
                    rule_id=smell["rule_id"],
                    symbol=smell["symbol"],
                    start_line=smell["start_line"],
                    start_col=smell["start_col"],
                    end_line=smell["end_line"],
                    end_col=smell["end_col"],
                    message=smell["message"],
                )
            )

    for rule_id in sorted(RULE_SYMBOLS):
        native_keys = {_match_key(d) for d in native if d.rule_id == rule_id}
        golden_keys = {_match_key(d) for d in golden if d.rule_id == rule_id}
        assert golden_keys, f"{rule_id}: golden corpus lacks instances"
        tp = len(native_keys & golden_keys)
        precision = tp / len(native_keys) if native_keys else 1.0
        recall = tp / len(golden_keys)
        assert precision >= 0.95, f"{rule_id}: precision {precision:.3f}"
        assert recall >= 0.95, f"{rule_id}: recall {recall:.3f}"

    # alignment of every golden diagnostic, minimality brute-forced
    for diag in golden:
        source = sources[diag.sample_id]
        token_texts = simple_tokenize(source)
        widths = [len(t.encode("utf-8")) for t in token_texts]
        trace = make_trace(source, widths, sample_id=diag.sample_id)
        try:
            span = align(diag, trace)
        except UnalignableError:
            pytest.fail(f"golden diagnostic unalignable: {diag}")
        spanned = trace.span_token_indices()
        if span.coverage is Coverage.FILE_TAIL:
            assert span.i == span.j == spanned[-1]
            continue
        lo, hi = diagnostic_byte_range(diag, trace)
        covering = [
            k for k in spanned
            if trace.tokens[k].byte_start < hi and trace.tokens[k].byte_end > lo
        ]
        # brute force smallest contiguous cover == alignment result
        assert (span.i, span.j) == (covering[0], covering[-1]), diag
        if span.i < span.j:
            assert trace.tokens[span.i].byte_end > lo
            assert trace.tokens[span.j].byte_start < hi
    _report("6 detector-agreement", time.perf_counter() - start, 10.0)


# -- 7: hermetic end-to-end mitigation + corpus filter -------------------------------


def test_criterion_7_end_to_end_mitigation(tmp_path):
    start = time.perf_counter()
    base = DATA / "mitigation"
    manifest = json.loads((base / "manifest.json").read_text())
    assert len(manifest) == 20
    pairs = [
        ((base / "snippets" / f"{e['sample_id']}.py").read_text(), e["completion"])
        for e in manifest
    ]
    out_csv = tmp_path / "paired.csv"
    svg_dir = tmp_path / "plots"
    behavior = mitigation_stub_behavior(pairs, baseline_prob=0.75, treatment_prob=0.25)
    with StubServer(behavior) as server:
        code = main(
            [
                "mitigate",
                "--corpus", str(base / "snippets"),
                "--manifest", str(base / "manifest.json"),
                "--base-url", server.base_url,
                "--out-csv", str(out_csv),
                "--svg-dir", str(svg_dir),
                "--strict",
            ]
        )
    assert code == 0

    with open(out_csv, newline="") as fh:
        reader = csv.DictReader(fh)
        assert reader.fieldnames == ["sample_id", "rule_id", "condition", "psc_median", "propense"]
        rows = list(reader)
    assert len(rows) == 40  # both conditions for all 20 samples
    by_condition: dict[tuple[str, str], list[float]] = {}
    for row in rows:
        assert row["condition"] in ("baseline", "treatment")
        assert row["propense"] in ("0", "1")
        by_condition.setdefault((row["rule_id"], row["condition"]), []).append(
            float(row["psc_median"])
        )
    for rule_id in ("W0719", "C0304", "W0611"):
        baseline = sorted(by_condition[(rule_id, "baseline")])
        treatment = sorted(by_condition[(rule_id, "treatment")])
        med = lambda v: v[len(v) // 2] if len(v) % 2 else (v[len(v) // 2 - 1] + v[len(v) // 2]) / 2
        gap = med(baseline) - med(treatment)
        assert abs(gap - 0.5) < 1e-9, f"{rule_id}: median gap {gap}"
        svg_path = svg_dir / f"mitigation_{rule_id}.svg"
        assert svg_path.exists()
        ET.fromstring(svg_path.read_text())  # schema-valid XML/SVG

    # corpus filter: exact-cap / exclude-under-cap / drop-over-length
    corpus = (
        [CorpusSample(f"a{k:04d}", "R_plenty", 100) for k in range(777)]
        + [CorpusSample(f"b{k:04d}", "R_short", 100) for k in range(499)]
        + [CorpusSample(f"c{k:04d}", "R_long", 701) for k in range(600)]
    )
    kept, notes = filter_corpus(corpus, CorpusFilter(max_tokens=700, per_rule_cap=500, seed=11))
    assert sum(1 for s in kept if s.rule_id == "R_plenty") == 500
    assert all(s.rule_id == "R_plenty" for s in kept)
    assert "excluded" in notes["R_short"]
    assert "excluded" in notes["R_long"]
    again, _ = filter_corpus(corpus, CorpusFilter(max_tokens=700, per_rule_cap=500, seed=11))
    assert [s.sample_id for s in again] == [s.sample_id for s in kept]
    _report("7 end-to-end", time.perf_counter() - start, 30.0)
