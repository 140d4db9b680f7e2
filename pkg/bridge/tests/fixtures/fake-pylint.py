#!/usr/bin/env python3
"""Stand-in for the external linter in hermetic bridge tests.

Mimics the linter's CLI shape (--version, --output-format=json, exit
status bitmask) and answers from the canned per-snippet JSON fixtures in
./pylint/, which hold the frozen diagnostics for the golden corpus.

Environment knobs for failure-path tests:
  FAKE_PYLINT_MODE=crash          garbage stdout, fatal exit bit
  FAKE_PYLINT_MODE=wrong-version  report an unpinned version
"""

import json
import os
import sys
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent / "pylint"
VERSION = "3.3.6"

_CATEGORY_BITS = {"fatal": 1, "error": 2, "warning": 4, "refactor": 8, "convention": 16}


def main() -> int:
    mode = os.environ.get("FAKE_PYLINT_MODE", "")
    args = sys.argv[1:]
    if "--version" in args:
        version = "9.9.9" if mode == "wrong-version" else VERSION
        print(f"pylint {version}")
        print("astroid 3.3.8")
        return 0
    if mode == "crash":
        print("Traceback (most recent call last): boom")
        return 1
    files = [a for a in args if not a.startswith("-")]
    messages = []
    status = 0
    for file_arg in files:
        fixture = FIXTURES / (Path(file_arg).stem + ".json")
        if not fixture.exists():
            continue
        for message in json.loads(fixture.read_text(encoding="utf-8")):
            message = dict(message)
            message["path"] = file_arg
            messages.append(message)
            status |= _CATEGORY_BITS.get(message.get("type", ""), 0)
    print(json.dumps(messages, indent=4))
    return status


if __name__ == "__main__":
    sys.exit(main())
