import json
import math
import random

import pytest

from psckit.core import SmellDiagnostic, validate_trace
from psckit.errors import OffsetError, ReconstructionError, SchemaError

from conftest import make_trace, random_trace


def _record(tokens, source="a="):
    return {"sample_id": "s", "source": source, "generated_from": None, "meta": {}, "tokens": tokens}


def test_minimal_wellformed_record():
    trace = validate_trace(
        _record(
            [
                {"text": "a", "byte_start": 0, "byte_end": 1, "logprob": -0.1},
                {"text": "=", "byte_start": 1, "byte_end": 2, "logprob": -0.2},
            ]
        )
    )
    assert len(trace.tokens) == 2
    assert trace.tokens[0].prob == pytest.approx(math.exp(-0.1))


def test_overlapping_spans_rejected():
    with pytest.raises(OffsetError):
        validate_trace(
            _record(
                [
                    {"text": "abc", "byte_start": 0, "byte_end": 3, "logprob": -0.1},
                    {"text": "cde", "byte_start": 2, "byte_end": 5, "logprob": -0.1},
                ],
                source="abcdefgh",
            )
        )


def test_reconstruction_mismatch_rejected():
    with pytest.raises(ReconstructionError):
        validate_trace(
            _record(
                [
                    {"text": "a", "byte_start": 0, "byte_end": 1, "logprob": -0.1},
                    {"text": "+", "byte_start": 1, "byte_end": 2, "logprob": -0.1},
                ]
            )
        )


def test_missing_field_rejected():
    with pytest.raises(SchemaError):
        validate_trace({"sample_id": "s", "tokens": []})


def test_positive_logprob_rejected():
    with pytest.raises(SchemaError):
        validate_trace(
            _record([{"text": "a", "byte_start": 0, "byte_end": 1, "logprob": 0.5}])
        )


def test_special_tokens_zero_width_allowed():
    trace = validate_trace(
        _record(
            [
                {"text": "<s>", "byte_start": 0, "byte_end": 0, "logprob": -0.5},
                {"text": "a", "byte_start": 0, "byte_end": 1, "logprob": -0.1},
                {"text": "=", "byte_start": 1, "byte_end": 2, "logprob": -0.2},
            ]
        )
    )
    assert trace.span_token_indices() == [1, 2]


def test_covered_length_sums_spans():
    rng = random.Random(7)
    for _ in range(50):
        trace = random_trace(rng)
        assert trace.covered_length() == len(trace.source.encode("utf-8"))


def test_serialize_round_trip():
    rng = random.Random(11)
    for _ in range(50):
        trace = random_trace(rng)
        rec = trace.to_record()
        again = validate_trace(json.loads(json.dumps(rec)))
        assert again == trace


def test_diagnostic_end_fields_paired():
    with pytest.raises(SchemaError):
        SmellDiagnostic(
            sample_id="s", rule_id="X", symbol="x", start_line=1, start_col=0, end_line=2
        )
    with pytest.raises(SchemaError):
        SmellDiagnostic(
            sample_id="s",
            rule_id="X",
            symbol="x",
            start_line=2,
            start_col=0,
            end_line=1,
            end_col=0,
        )


def test_line_byte_offsets():
    trace = make_trace("ab\ncd\n", [3, 3])
    assert trace.line_byte_offsets() == [0, 3, 6]
