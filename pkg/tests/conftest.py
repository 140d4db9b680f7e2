"""Shared test fixtures and builders."""

from __future__ import annotations

import math
import random
from pathlib import Path

import pytest

from psckit.core import TokenTrace, validate_trace

DATA = Path(__file__).resolve().parent.parent / "src" / "psckit" / "data"


def make_trace(
    source: str,
    piece_lengths: list[int] | None = None,
    probs: list[float] | None = None,
    sample_id: str = "t",
    generated_from: int | None = None,
) -> TokenTrace:
    """Build a trace whose tokens tile the source.

    piece_lengths are byte widths per token (must sum to the source byte
    length); probs are per-token probabilities (defaults deterministic).
    """
    data = source.encode("utf-8")
    if piece_lengths is None:
        piece_lengths = [1] * len(data)
    assert sum(piece_lengths) == len(data), "piece lengths must tile the source"
    if probs is None:
        probs = [0.1 + 0.8 * ((k * 37) % 11) / 10.0 for k in range(len(piece_lengths))]
    tokens = []
    cursor = 0
    for width, p in zip(piece_lengths, probs):
        tokens.append(
            {
                "text": data[cursor : cursor + width].decode("utf-8"),
                "byte_start": cursor,
                "byte_end": cursor + width,
                "logprob": math.log(p),
            }
        )
        cursor += width
    return validate_trace(
        {
            "sample_id": sample_id,
            "source": source,
            "generated_from": generated_from,
            "meta": {},
            "tokens": tokens,
        }
    )


def random_trace(rng: random.Random, n_tokens: int | None = None) -> TokenTrace:
    """Random single-line trace with random token widths and probabilities."""
    n = n_tokens or rng.randint(1, 40)
    widths = [rng.randint(1, 5) for _ in range(n)]
    source = "".join(
        rng.choice("abcdefghijklmnopqrstuvwxyz_ =+-") * w for w in widths
    )
    probs = [rng.uniform(1e-6, 1.0) for _ in range(n)]
    return make_trace(source, widths, probs)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xBADA55)
