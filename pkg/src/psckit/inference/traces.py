"""JSONL trace files: one trace object per line, lossless round-trip."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator

from ..core import TokenTrace, validate_trace
from ..errors import SchemaError


def read_traces(path: str | Path) -> Iterator[TokenTrace]:
    """Stream traces from a JSONL file; schema errors cite the line."""
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"not valid JSON: {exc.msg}", lineno) from exc
            yield validate_trace(raw, line=lineno)


def write_traces(traces: Iterable[TokenTrace], path: str | Path) -> int:
    """Serialize traces one per line; returns the number written."""
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for trace in traces:
            fh.write(json.dumps(trace.to_record(), ensure_ascii=False))
            fh.write("\n")
            count += 1
    return count
