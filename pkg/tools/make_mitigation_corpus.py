#!/usr/bin/env python3
"""Regenerate the bundled mitigation corpus.

20 smelly-function prefixes, each with a target rule and the canned
completion the stub endpoint returns for it (the completion contains the
target smell inside the generated segment). Emits one snippet file per
sample plus manifest.json.

Usage: python tools/make_mitigation_corpus.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT_DIR = ROOT / "src" / "psckit" / "data" / "mitigation"

# (sample_id, rule_id, snippet prefix, canned completion)
SAMPLES: list[tuple[str, str, str, str]] = []

_BROAD_RAISE = [
    ("withdraw", "amount", "amount < 0", "negative amount"),
    ("set_ratio", "ratio", "ratio > 1", "ratio too large"),
    ("open_slot", "slot", "slot == 0", "slot unavailable"),
    ("push_item", "item", "item is None", "missing item"),
    ("set_port", "port", "port < 1024", "reserved port"),
    ("charge", "price", "price == 0", "zero price"),
    ("resize", "size", "size < 1", "bad size"),
]
for k, (name, arg, cond, msg) in enumerate(_BROAD_RAISE, start=1):
    SAMPLES.append(
        (
            f"m{k:03d}",
            "W0719",
            f"def {name}_m{k:03d}({arg}):\n    if {cond}:\n",
            f"        raise Exception('{msg}')\n    return {arg}\n",
        )
    )

_UNUSED_IMPORT = [
    ("load_config", "path", "os"),
    ("read_rows", "table", "csv"),
    ("parse_spec", "text", "re"),
    ("hash_key", "key", "hashlib"),
    ("pick_one", "options", "random"),
    ("timestamp", "value", "time"),
    ("deep_copy", "obj", "copy"),
]
for k, (name, arg, module) in enumerate(_UNUSED_IMPORT, start=8):
    SAMPLES.append(
        (
            f"m{k:03d}",
            "W0611",
            f"def {name}_m{k:03d}({arg}):\n",
            f"    import {module}\n    return {arg}\n",
        )
    )

_NO_NEWLINE = [
    ("total_price", "items", "sum(items)"),
    ("first_key", "mapping", "sorted(mapping)[0]"),
    ("flatten", "rows", "[x for row in rows for x in row]"),
    ("double", "value", "value * 2"),
    ("tail", "seq", "seq[-1]"),
    ("upper_name", "name", "name.upper()"),
]
for k, (name, arg, expr) in enumerate(_NO_NEWLINE, start=15):
    SAMPLES.append(
        (
            f"m{k:03d}",
            "C0304",
            f"def {name}_m{k:03d}({arg}):\n",
            f"    return {expr}",
        )
    )


def main() -> int:
    snippets_dir = OUT_DIR / "snippets"
    snippets_dir.mkdir(parents=True, exist_ok=True)
    manifest = []
    for sample_id, rule_id, snippet, completion in SAMPLES:
        compile(snippet + completion, sample_id, "exec")  # combined source must parse
        (snippets_dir / f"{sample_id}.py").write_text(snippet, encoding="utf-8")
        manifest.append(
            {"sample_id": sample_id, "rule_id": rule_id, "completion": completion}
        )
    (OUT_DIR / "manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote {len(SAMPLES)} mitigation samples")
    return 0


if __name__ == "__main__":
    sys.exit(main())
