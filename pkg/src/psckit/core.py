"""Shared domain types: scored token traces and smell diagnostics.

All types are immutable after construction and safe to share across
workers. Offsets are byte offsets into the UTF-8 encoding of the source
text; tokenizers report byte spans and byte arithmetic stays exact for
multi-byte text. Probabilities are stored as natural-log values and
exponentiated on use, which avoids premature underflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator, Mapping

from .errors import OffsetError, ReconstructionError, SchemaError


@dataclass(frozen=True)
class TokenRecord:
    """One scored token: decoded text, byte span, and log-probability.

    Tokens without a source span (tokenizer specials) carry
    byte_start == byte_end and are excluded from alignment.
    """

    text: str
    byte_start: int
    byte_end: int
    logprob: float

    def __post_init__(self):
        if self.byte_start < 0 or self.byte_end < 0:
            raise SchemaError(f"negative byte offset in token {self.text!r}")
        if self.byte_end < self.byte_start:
            raise OffsetError(f"byte_end < byte_start in token {self.text!r}")
        if math.isnan(self.logprob) or self.logprob > 0.0 or math.isinf(self.logprob):
            raise SchemaError(
                f"logprob {self.logprob!r} of token {self.text!r} is not a finite value <= 0"
            )

    @property
    def prob(self) -> float:
        return math.exp(self.logprob)

    @property
    def has_span(self) -> bool:
        """Whether this token anchors to source bytes (specials do not)."""
        return self.byte_end > self.byte_start


@dataclass(frozen=True)
class TokenTrace:
    """A scored token sequence over one code sample."""

    sample_id: str
    source: str
    tokens: tuple[TokenRecord, ...]
    generated_from: int | None = None
    meta: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "meta", dict(self.meta))
        src = self.source.encode("utf-8")
        prev_end = 0
        for k, tok in enumerate(self.tokens):
            if tok.byte_start < prev_end:
                raise OffsetError(
                    f"token {k} ({tok.text!r}) starts at byte {tok.byte_start}, "
                    f"before previous token end {prev_end}"
                )
            if tok.byte_end > len(src):
                raise OffsetError(f"token {k} ({tok.text!r}) ends past the source")
            if tok.has_span:
                covered = src[tok.byte_start : tok.byte_end].decode("utf-8", "replace")
                if covered != tok.text:
                    raise ReconstructionError(
                        f"token {k} text {tok.text!r} != source bytes "
                        f"[{tok.byte_start}:{tok.byte_end}] {covered!r}"
                    )
                prev_end = tok.byte_end
        if self.generated_from is not None and self.generated_from < 0:
            raise SchemaError("generated_from must be non-negative")

    def __len__(self) -> int:
        return len(self.tokens)

    def probs(self) -> list[float]:
        return [t.prob for t in self.tokens]

    def span_token_indices(self) -> list[int]:
        """Indices of tokens that anchor to source bytes."""
        return [k for k, t in enumerate(self.tokens) if t.has_span]

    def covered_length(self) -> int:
        return sum(t.byte_end - t.byte_start for t in self.tokens)

    def line_byte_offsets(self) -> list[int]:
        """Byte offset of the start of each 1-based source line."""
        offsets = [0]
        for line in self.source.encode("utf-8").split(b"\n")[:-1]:
            offsets.append(offsets[-1] + len(line) + 1)
        return offsets

    def to_record(self) -> dict[str, Any]:
        return {
            "sample_id": self.sample_id,
            "source": self.source,
            "generated_from": self.generated_from,
            "meta": dict(self.meta),
            "tokens": [
                {
                    "text": t.text,
                    "byte_start": t.byte_start,
                    "byte_end": t.byte_end,
                    "logprob": t.logprob,
                }
                for t in self.tokens
            ],
        }


class SeverityLabel(Enum):
    """Snippet-level smell severity: high when most tokens are smelly."""

    LOW = "low"
    HIGH = "high"


@dataclass(frozen=True, order=True)
class SmellDiagnostic:
    """One detected smell instance with its source range.

    Lines are 1-based; columns are 0-based byte offsets within the line,
    matching common linter output conventions. End fields are optional.
    """

    sample_id: str
    rule_id: str
    symbol: str
    start_line: int
    start_col: int
    end_line: int | None = None
    end_col: int | None = None
    message: str = ""

    def __post_init__(self):
        if self.start_line < 1 or self.start_col < 0:
            raise SchemaError(
                f"{self.rule_id}: start position ({self.start_line},{self.start_col}) out of range"
            )
        if (self.end_line is None) != (self.end_col is None):
            raise SchemaError(f"{self.rule_id}: end_line and end_col must be given together")
        if self.end_line is not None:
            if (self.end_line, self.end_col) < (self.start_line, self.start_col):
                raise SchemaError(f"{self.rule_id}: end position precedes start position")

    @property
    def has_end(self) -> bool:
        return self.end_line is not None


_TOKEN_FIELDS = {"text": str, "byte_start": int, "byte_end": int, "logprob": (int, float)}


def validate_trace(raw: Mapping[str, Any], line: int | None = None) -> TokenTrace:
    """Build a TokenTrace from a parsed JSONL trace record.

    Raises SchemaError for missing or mistyped fields, OffsetError for
    overlapping or out-of-order spans, and ReconstructionError when token
    texts disagree with the source substring they cover.
    """
    if not isinstance(raw, Mapping):
        raise SchemaError("trace record must be an object", line)
    for name, typ in (("sample_id", str), ("source", str), ("tokens", list)):
        if name not in raw:
            raise SchemaError(f"missing field {name!r}", line)
        if not isinstance(raw[name], typ):
            raise SchemaError(f"field {name!r} must be {typ.__name__}", line)
    generated_from = raw.get("generated_from")
    if generated_from is not None and not isinstance(generated_from, int):
        raise SchemaError("field 'generated_from' must be an integer or null", line)
    meta = raw.get("meta") or {}
    if not isinstance(meta, Mapping) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in meta.items()
    ):
        raise SchemaError("field 'meta' must map strings to strings", line)

    tokens = []
    for k, item in enumerate(raw["tokens"]):
        if not isinstance(item, Mapping):
            raise SchemaError(f"token {k} must be an object", line)
        for name, typ in _TOKEN_FIELDS.items():
            if name not in item:
                raise SchemaError(f"token {k} missing field {name!r}", line)
            if not isinstance(item[name], typ) or isinstance(item[name], bool):
                raise SchemaError(f"token {k} field {name!r} has wrong type", line)
        try:
            tokens.append(
                TokenRecord(
                    text=item["text"],
                    byte_start=item["byte_start"],
                    byte_end=item["byte_end"],
                    logprob=float(item["logprob"]),
                )
            )
        except SchemaError as exc:
            if line is not None and exc.line is None:
                raise type(exc)(str(exc), line) from exc
            raise

    try:
        return TokenTrace(
            sample_id=raw["sample_id"],
            source=raw["source"],
            tokens=tuple(tokens),
            generated_from=generated_from,
            meta=meta,
        )
    except SchemaError as exc:
        if line is not None and exc.line is None:
            raise type(exc)(str(exc), line) from exc
        raise


def iter_diagnostic_records(raw: Mapping[str, Any]) -> Iterator[SmellDiagnostic]:
    """Yield diagnostics from one parsed diagnostics-JSON record.

    Unknown rule ids pass through untouched; scoring is rule-agnostic.
    """
    if "sample_id" not in raw or not isinstance(raw["sample_id"], str):
        raise SchemaError("diagnostics record missing string field 'sample_id'")
    smells = raw.get("smells")
    if not isinstance(smells, list):
        raise SchemaError("diagnostics record missing list field 'smells'")
    for k, item in enumerate(smells):
        if not isinstance(item, Mapping):
            raise SchemaError(f"smell {k} must be an object")
        for name in ("rule_id", "symbol", "message"):
            if not isinstance(item.get(name), str):
                raise SchemaError(f"smell {k} missing string field {name!r}")
        for name in ("start_line", "start_col"):
            if not isinstance(item.get(name), int):
                raise SchemaError(f"smell {k} missing integer field {name!r}")
        for name in ("end_line", "end_col"):
            if name in item and item[name] is not None and not isinstance(item[name], int):
                raise SchemaError(f"smell {k} field {name!r} must be integer or null")
        yield SmellDiagnostic(
            sample_id=raw["sample_id"],
            rule_id=item["rule_id"],
            symbol=item["symbol"],
            start_line=item["start_line"],
            start_col=item["start_col"],
            end_line=item.get("end_line"),
            end_col=item.get("end_col"),
            message=item["message"],
        )
