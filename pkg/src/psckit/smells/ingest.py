"""Read diagnostics produced by an external linter bridge.

The bridge JSON schema carries one record per snippet:
{"sample_id": str, "smells": [{rule_id, symbol, start_line, start_col,
end_line, end_col, message}]}. Records may carry extra keys (the bridge
stamps its linter version); they are ignored here. Unknown rule ids pass
through untouched because scoring is rule-agnostic.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from ..core import SmellDiagnostic, iter_diagnostic_records
from ..errors import SchemaError


def parse_diagnostics(record: dict[str, Any]) -> list[SmellDiagnostic]:
    """Validate one record and return its diagnostics in detect() order."""
    diags = list(iter_diagnostic_records(record))
    diags.sort(key=lambda d: (d.start_line, d.start_col, d.rule_id))
    return diags


def ingest_diagnostics(path: str | Path) -> list[SmellDiagnostic]:
    """Load a diagnostics JSON file (one record, or a list of records)."""
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    records = payload if isinstance(payload, list) else [payload]
    diags: list[SmellDiagnostic] = []
    for record in records:
        if not isinstance(record, dict):
            raise SchemaError(f"{path}: each record must be an object")
        diags.extend(parse_diagnostics(record))
    return diags
