import math
import random
from array import array

import pytest

from psckit import psc
from psckit.align import Coverage, TokenSpan
from psckit.core import SmellDiagnostic
from psckit.errors import BoundsMismatchError
from psckit.psc import _pykernels
from psckit.psc.bounds import BoundsScope, ReferenceBounds, build_bounds

from conftest import make_trace, random_trace

# -- independent oracle (direct summation, no kernel code) -------------------


def oracle_mean(probs):
    return sum(probs) / len(probs)


def oracle_median(probs):
    s = sorted(probs)
    n = len(s)
    return s[n // 2] if n % 2 else (s[n // 2 - 1] + s[n // 2]) / 2


def oracle_relative(probs, mins, maxs, eps):
    acc = 0.0
    for p, lo, hi in zip(probs, mins, maxs):
        acc += (p - lo) / (hi - lo + eps)
    return acc / len(probs)


def _span(trace):
    return TokenSpan(0, len(trace.tokens) - 1, Coverage.EXACT)


def test_mean_examples():
    t = make_trace("abc", [1, 1, 1], [0.5, 0.7, 0.9])
    assert psc.psc_mean(t, _span(t)) == pytest.approx(0.7, abs=1e-12)
    t1 = make_trace("a", [1], [0.42])
    assert psc.psc_mean(t1, _span(t1)) == pytest.approx(0.42, abs=1e-12)
    t2 = make_trace("abc", [1, 1, 1], [0.1, 0.1, 1.0])
    assert psc.psc_mean(t2, _span(t2)) == pytest.approx(0.4, abs=1e-12)


def test_median_examples():
    t = make_trace("abc", [1, 1, 1], [0.1, 0.9, 0.8])
    assert psc.psc_median(t, _span(t)) == pytest.approx(0.8, abs=1e-12)
    t2 = make_trace("ab", [1, 1], [0.2, 0.4])
    assert psc.psc_median(t2, _span(t2)) == pytest.approx(0.3, abs=1e-12)
    t3 = make_trace("a", [1], [0.7])
    assert psc.psc_median(t3, _span(t3)) == pytest.approx(0.7, abs=1e-12)


def test_relative_examples():
    probs = [0.2, 0.5, 0.8]
    t = make_trace("abc", [1, 1, 1], probs)
    span = _span(t)
    at_min = ReferenceBounds(offsets=tuple((p, p + 0.5) for p in probs))
    assert psc.psc_relative(t, span, at_min) == pytest.approx(0.0, abs=1e-12)
    at_max = ReferenceBounds(offsets=tuple((p - 0.5, p) for p in probs))
    assert psc.psc_relative(t, span, at_max) == pytest.approx(1.0, abs=1e-8)
    degenerate = ReferenceBounds(offsets=tuple((p, p) for p in probs))
    assert psc.psc_relative(t, span, degenerate) == pytest.approx(0.0, abs=1e-12)


def test_relative_missing_position():
    t = make_trace("abc", [1, 1, 1], [0.2, 0.5, 0.8])
    short = ReferenceBounds(offsets=((0.0, 1.0),), global_bounds=None)
    with pytest.raises(BoundsMismatchError):
        psc.psc_relative(t, _span(t), short)


def test_classify_threshold():
    assert psc.classify(0.5) is True
    assert psc.classify(0.49) is False
    assert psc.classify(1.0) is True
    with pytest.raises(ValueError):
        psc.classify(float("nan"))


def test_aggregators_match_oracle_on_random_spans(rng: random.Random):
    for _ in range(400):
        trace = random_trace(rng)
        n = len(trace.tokens)
        i = rng.randrange(n)
        j = rng.randrange(i, n)
        span = TokenSpan(i, j, Coverage.EXACT)
        probs = [t.prob for t in trace.tokens[i : j + 1]]
        assert psc.psc_mean(trace, span) == pytest.approx(oracle_mean(probs), abs=1e-12)
        assert psc.psc_median(trace, span) == pytest.approx(oracle_median(probs), abs=1e-12)
        mins = [max(p - rng.random() * 0.3, 0.0) for p in probs]
        maxs = [min(p + rng.random() * 0.3, 1.0) for p in probs]
        bounds = ReferenceBounds(offsets=tuple(zip(mins, maxs)))
        assert psc.psc_relative(trace, span, bounds) == pytest.approx(
            oracle_relative(probs, mins, maxs, bounds.epsilon), abs=1e-12
        )


def test_permutation_invariance(rng: random.Random):
    for _ in range(100):
        n = rng.randint(1, 20)
        probs = [rng.random() for _ in range(n)]
        t1 = make_trace("x" * n, [1] * n, probs)
        shuffled = probs[:]
        rng.shuffle(shuffled)
        t2 = make_trace("x" * n, [1] * n, shuffled)
        s1, s2 = _span(t1), _span(t2)
        assert psc.psc_mean(t1, s1) == pytest.approx(psc.psc_mean(t2, s2), abs=1e-12)
        assert psc.psc_median(t1, s1) == pytest.approx(psc.psc_median(t2, s2), abs=1e-12)


def test_relative_affine_invariance(rng: random.Random):
    """Jointly rescaling P, P_min, P_max leaves the relative score unchanged
    up to epsilon effects."""
    for _ in range(100):
        n = rng.randint(1, 10)
        probs = [rng.uniform(0.2, 0.8) for _ in range(n)]
        mins = [p - rng.uniform(0.05, 0.2) for p in probs]
        maxs = [p + rng.uniform(0.05, 0.2) for p in probs]
        eps = 1e-12
        base = oracle_relative(probs, mins, maxs, eps)
        a = rng.uniform(0.1, 1.2)
        b = rng.uniform(-0.05, 0.05)
        scaled = oracle_relative(
            [a * p + b for p in probs],
            [a * m + b for m in mins],
            [a * m + b for m in maxs],
            eps,
        )
        assert scaled == pytest.approx(base, abs=1e-4)


def test_constant_span_properties():
    n = 7
    t = make_trace("y" * n, [1] * n, [0.37] * n)
    span = _span(t)
    assert psc.psc_mean(t, span) == pytest.approx(0.37, abs=1e-12)
    assert psc.psc_median(t, span) == pytest.approx(0.37, abs=1e-12)
    bounds = ReferenceBounds(offsets=tuple((0.37, 0.37) for _ in range(n)))
    assert psc.psc_relative(t, span, bounds) == pytest.approx(0.0, abs=1e-12)


def test_backends_agree_bit_for_bit(rng: random.Random):
    speedups = pytest.importorskip("psckit._speedups")
    for _ in range(200):
        n = rng.randint(1, 30)
        probs = array("d", (rng.random() for _ in range(n)))
        i = rng.randrange(n)
        j = rng.randrange(i, n)
        assert speedups.span_mean(probs, i, j) == _pykernels.span_mean(probs, i, j)
        assert speedups.span_median(probs, i, j) == _pykernels.span_median(probs, i, j)
        m = j - i + 1
        mins = array("d", (rng.random() * 0.5 for _ in range(m)))
        maxs = array("d", (v + 0.5 for v in mins))
        assert speedups.span_relative(probs, i, j, mins, maxs, 1e-9) == _pykernels.span_relative(
            probs, i, j, mins, maxs, 1e-9
        )


def test_bounds_building_per_rule_with_fallback():
    spans = [
        ("R1", [0.2, 0.4, 0.9]),
        ("R1", [0.6, 0.1]),
        ("R2", [0.5]),
    ]
    bs = build_bounds(spans)
    r1 = bs.for_rule("R1")
    # offsets limited by the shortest R1 span (length 2)
    assert r1.offsets == ((0.2, 0.6), (0.1, 0.4))
    # beyond: global batch extremes
    assert r1.at(2) == (0.1, 0.9)
    with pytest.raises(BoundsMismatchError):
        bs.for_rule("R3")


def test_bounds_global_scope_pools_rules():
    spans = [("R1", [0.2, 0.4]), ("R2", [0.6, 0.1])]
    bs = build_bounds(spans, scope=BoundsScope.GLOBAL_BATCH)
    pooled = bs.for_rule("anything")
    assert pooled.offsets == ((0.2, 0.6), (0.1, 0.4))


def test_score_batch_decision_uses_median():
    t = make_trace("abc", [1, 1, 1], [0.9, 0.4, 0.2])
    diag = SmellDiagnostic(
        sample_id="t", rule_id="R1", symbol="x", start_line=1, start_col=0,
        end_line=1, end_col=3,
    )
    span = TokenSpan(0, 2, Coverage.EXACT)
    [score] = psc.score_batch([(t, diag, span)])
    assert score.psc_median == pytest.approx(0.4, abs=1e-12)
    assert score.propense is False  # median 0.4 < 0.5 even though mean 0.5


def test_backend_selection_honors_env(tmp_path):
    import subprocess
    import sys

    probe = "from psckit.psc import kernels; print(kernels.BACKEND)"
    forced = subprocess.run(
        [sys.executable, "-c", probe],
        capture_output=True, text=True, env={"PATH": "/usr/bin:/bin", "PSCKIT_PURE_PYTHON": "1"},
    )
    assert forced.stdout.strip() == "python"
    default = subprocess.run(
        [sys.executable, "-c", probe], capture_output=True, text=True,
        env={"PATH": "/usr/bin:/bin"},
    )
    assert default.stdout.strip() in ("compiled", "python")
