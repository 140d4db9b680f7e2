"""Decoding strategy configuration for completion requests.

Strategy-specific fields must be present exactly when the strategy
requires them; construction fills documented defaults and rejects fields
that do not belong to the chosen strategy.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from enum import Enum

from ..errors import SchemaError


class Strategy(Enum):
    GREEDY = "greedy"
    BEAM = "beam"
    SAMPLING = "sampling"
    CONTRASTIVE = "contrastive"
    TOP_K = "top_k"
    TOP_P = "top_p"


_DEFAULTS: dict[Strategy, dict[str, object]] = {
    Strategy.GREEDY: {},
    Strategy.BEAM: {"num_beams": 5, "early_stopping": True},
    Strategy.SAMPLING: {"temperature": 1.0},
    Strategy.CONTRASTIVE: {"penalty_alpha": 0.6, "top_k": 4},
    Strategy.TOP_K: {"top_k": 50, "temperature": 1.0},
    Strategy.TOP_P: {"top_p": 0.9, "temperature": 1.0},
}

_STOCHASTIC = {Strategy.SAMPLING, Strategy.TOP_K, Strategy.TOP_P}

_STRATEGY_FIELDS = ("num_beams", "early_stopping", "penalty_alpha", "top_k", "top_p", "temperature")


@dataclass(frozen=True)
class DecodingConfig:
    strategy: Strategy
    max_new_tokens: int = 128
    num_beams: int | None = None
    early_stopping: bool | None = None
    penalty_alpha: float | None = None
    top_k: int | None = None
    top_p: float | None = None
    temperature: float | None = None
    seed: int | None = None

    def __post_init__(self):
        if isinstance(self.strategy, str):
            object.__setattr__(self, "strategy", Strategy(self.strategy))
        if self.max_new_tokens < 1:
            raise SchemaError("max_new_tokens must be positive")
        spec = _DEFAULTS[self.strategy]
        for name in _STRATEGY_FIELDS:
            value = getattr(self, name)
            if name in spec:
                if value is None:
                    object.__setattr__(self, name, spec[name])
            elif value is not None:
                raise SchemaError(
                    f"field {name!r} does not apply to strategy {self.strategy.value!r}"
                )
        if self.seed is not None and self.strategy not in _STOCHASTIC:
            raise SchemaError(f"seed does not apply to strategy {self.strategy.value!r}")
        self._validate_ranges()

    def _validate_ranges(self):
        if self.num_beams is not None and self.num_beams < 1:
            raise SchemaError("num_beams must be positive")
        if self.penalty_alpha is not None and not 0.0 <= self.penalty_alpha <= 1.0:
            raise SchemaError("penalty_alpha must be in [0, 1]")
        if self.top_k is not None and self.top_k < 1:
            raise SchemaError("top_k must be positive")
        if self.top_p is not None and not 0.0 < self.top_p <= 1.0:
            raise SchemaError("top_p must be in (0, 1]")
        if self.temperature is not None and self.temperature <= 0.0:
            raise SchemaError("temperature must be positive")

    @property
    def deterministic(self) -> bool:
        return self.strategy not in _STOCHASTIC

    def config_id(self) -> str:
        parts = []
        for f in fields(self):
            if f.name in ("strategy", "max_new_tokens"):
                continue
            value = getattr(self, f.name)
            if value is not None:
                parts.append(f"{f.name}={value}")
        inner = ",".join(parts)
        return f"{self.strategy.value}({inner})" if inner else self.strategy.value

    def request_fields(self) -> dict[str, object]:
        """Wire fields for a completions request; extensions verbatim."""
        out: dict[str, object] = {"strategy": self.strategy.value}
        if self.strategy is Strategy.GREEDY:
            out["temperature"] = 0.0
        for name in ("num_beams", "early_stopping", "penalty_alpha", "top_k", "top_p", "temperature", "seed"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out
