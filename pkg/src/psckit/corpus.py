"""Corpus filtering: token-length cutoff plus balanced per-rule sampling.

Samples longer than the token cutoff are dropped; rules with at least
the cap are down-sampled to exactly the cap with a seeded draw, and
rules below the cap are excluded so every retained rule has the same
instance count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

DEFAULT_MAX_TOKENS = 700
DEFAULT_PER_RULE_CAP = 500


@dataclass(frozen=True)
class CorpusSample:
    sample_id: str
    rule_id: str
    token_count: int


@dataclass(frozen=True)
class CorpusFilter:
    max_tokens: int = DEFAULT_MAX_TOKENS
    per_rule_cap: int = DEFAULT_PER_RULE_CAP
    seed: int = 0

    def __post_init__(self):
        if self.max_tokens < 1 or self.per_rule_cap < 1:
            raise ValueError("filter caps must be positive")


def filter_corpus(
    corpus: Sequence[CorpusSample], spec: CorpusFilter
) -> tuple[list[CorpusSample], dict[str, str]]:
    """Apply the length and balance filters.

    Returns the retained samples (stable order: rule id, then sample id)
    plus a per-rule note of what happened to excluded rules.
    """
    within = [s for s in corpus if s.token_count <= spec.max_tokens]
    by_rule: dict[str, list[CorpusSample]] = {}
    for sample in within:
        by_rule.setdefault(sample.rule_id, []).append(sample)

    kept: list[CorpusSample] = []
    notes: dict[str, str] = {}
    for rule_id in sorted({s.rule_id for s in corpus} - set(by_rule)):
        notes[rule_id] = f"excluded: 0 samples within {spec.max_tokens} tokens"
    for rule_id in sorted(by_rule):
        group = sorted(by_rule[rule_id], key=lambda s: s.sample_id)
        if len(group) < spec.per_rule_cap:
            notes[rule_id] = f"excluded: {len(group)} < cap {spec.per_rule_cap}"
            continue
        if len(group) > spec.per_rule_cap:
            rng = random.Random((spec.seed, rule_id).__repr__())
            group = sorted(
                rng.sample(group, spec.per_rule_cap), key=lambda s: s.sample_id
            )
            notes[rule_id] = f"down-sampled to {spec.per_rule_cap}"
        kept.extend(group)
    return kept, notes
