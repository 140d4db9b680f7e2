#!/usr/bin/env python3
"""Regenerate the golden detection corpus.

Single source of truth for the 50 golden snippets and their expected
linter diagnostics (hand-derived, frozen here). Emits three artifact
sets:

  src/psckit/data/golden/snippets/sNNN.py     the snippets
  bridge/tests/fixtures/pylint/sNNN.json      canned linter JSON, used by
                                              the bridge's fake-linter
                                              fixture in place of a live
                                              pylint run
  src/psckit/data/golden/diagnostics/sNNN.json  bridge-schema goldens

The diagnostics JSON conversion here mirrors the bridge exactly (same
field order, 2-space indent, trailing newline) so a bridge regeneration
reproduces the committed goldens byte-for-byte.

Usage: python tools/make_golden_corpus.py [--check]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
SNIPPET_DIR = ROOT / "src" / "psckit" / "data" / "golden" / "snippets"
GOLDEN_DIR = ROOT / "src" / "psckit" / "data" / "golden" / "diagnostics"
CANNED_DIR = ROOT / "bridge" / "tests" / "fixtures" / "pylint"

LINTER_VERSION = "3.3.6"

_CATEGORY = {"C": "convention", "W": "warning", "R": "refactor", "E": "error"}

SYMBOLS = {
    "C0301": "line-too-long",
    "C0303": "trailing-whitespace",
    "C0304": "missing-final-newline",
    "C0305": "trailing-newlines",
    "C0321": "multiple-statements",
    "C0103": "invalid-name",
    "C0415": "import-outside-toplevel",
    "W0102": "dangerous-default-value",
    "W0611": "unused-import",
    "W0612": "unused-variable",
    "W0613": "unused-argument",
    "W0719": "broad-exception-raised",
    "R1705": "no-else-return",
}

# (msg_id, line, col, end_line, end_col, message); end positions None for
# line-level checks, mirroring linter output.
CORPUS: list[tuple[str, str, list[tuple]]] = [
    (
        "s001",
        "import os\n\ndef use_sep():\n    return 1\n",
        [("W0611", 1, 0, 1, 9, "Unused import os")],
    ),
    (
        "s002",
        "from pathlib import Path\n\ndef mk(p):\n    return p\n",
        [("W0611", 1, 0, 1, 24, "Unused Path imported from pathlib")],
    ),
    (
        "s003",
        "import json as js\n\ndef dump(x):\n    return x\n",
        [("W0611", 1, 0, 1, 17, "Unused json imported as js")],
    ),
    (
        "s004",
        "import os.path\n\ndef walk(tree):\n    return tree\n",
        [("W0611", 1, 0, 1, 14, "Unused import os.path")],
    ),
    (
        "s005",
        "import math\n\ndef area(r):\n    return math.pi * r * r\n",
        [],
    ),
    (
        "s006",
        "def total(xs):\n    acc = 0\n    unused = 3\n    for x in xs:\n        acc += x\n    return acc\n",
        [("W0612", 3, 4, 3, 10, "Unused variable 'unused'")],
    ),
    (
        "s007",
        "def head_pair(items):\n    first, second = items[0], items[1]\n    return first\n",
        [("W0612", 2, 11, 2, 17, "Unused variable 'second'")],
    ),
    (
        "s008",
        "def ping(times):\n    calls = []\n    for idx in range(times):\n        calls.append(1)\n    return calls\n",
        [("W0612", 3, 8, 3, 11, "Unused variable 'idx'")],
    ),
    (
        "s009",
        "def read_size(path):\n    with open(path) as fh:\n        data = fh.read()\n    return len(data)\n",
        [],
    ),
    (
        "s010",
        "def greet(name, title):\n    return 'hi ' + name\n",
        [("W0613", 1, 16, 1, 21, "Unused argument 'title'")],
    ),
    (
        "s011",
        "class Box:\n    def get(self, key, default):\n        return key\n",
        [("W0613", 2, 23, 2, 30, "Unused argument 'default'")],
    ),
    (
        "s012",
        "def todo(a, b):\n    pass\n",
        [],
    ),
    (
        "s013",
        "def fmt(value, *, width):\n    return value\n",
        [("W0613", 1, 18, 1, 23, "Unused argument 'width'")],
    ),
    (
        "s014",
        "def collect(item, bucket=[]):\n    bucket.append(item)\n    return bucket\n",
        [("W0102", 1, 0, 3, 17, "Dangerous default value [] as argument")],
    ),
    (
        "s015",
        "def tag(meta={}):\n    return meta\n",
        [("W0102", 1, 0, 2, 15, "Dangerous default value {} as argument")],
    ),
    (
        "s016",
        "def uniq(seen=set()):\n    return seen\n",
        [("W0102", 1, 0, 2, 15, "Dangerous default value set() as argument")],
    ),
    (
        "s017",
        "def safe(items=None):\n    return items or []\n",
        [],
    ),
    (
        "s018",
        "def fail():\n    raise Exception('failed')\n",
        [("W0719", 2, 4, 2, 29, "Raising too general exception: Exception")],
    ),
    (
        "s019",
        "def guard(flag):\n    if not flag:\n        raise Exception\n    return flag\n",
        [("W0719", 3, 8, 3, 23, "Raising too general exception: Exception")],
    ),
    (
        "s020",
        "def crash():\n    raise BaseException('no')\n",
        [("W0719", 2, 4, 2, 29, "Raising too general exception: BaseException")],
    ),
    (
        "s021",
        "def need(v):\n    if v is None:\n        raise ValueError('v required')\n    return v\n",
        [],
    ),
    (
        "s022",
        'MSG = "' + "a" * 100 + '"\n',
        [("C0301", 1, 0, None, None, "Line too long (108/100)")],
    ),
    (
        "s023",
        "def describe():\n    # " + "x" * 100 + "\n    return 1\n",
        [("C0301", 2, 0, None, None, "Line too long (106/100)")],
    ),
    (
        "s024",
        "NOTE = '" + "b" * 90 + "'\n",
        [],
    ),
    (
        "s025",
        "def pad():   \n    return 2\n",
        [("C0303", 1, 10, None, None, "Trailing whitespace")],
    ),
    (
        "s026",
        "VALUE = 9\t\n",
        [("C0303", 1, 9, None, None, "Trailing whitespace")],
    ),
    (
        "s027",
        "def a():\n    x = 1 \n    return x\n",
        [("C0303", 2, 9, None, None, "Trailing whitespace")],
    ),
    (
        "s028",
        "def last():\n    return 3",
        [("C0304", 2, 0, None, None, "Final newline missing")],
    ),
    (
        "s029",
        "COUNT = 4",
        [("C0304", 1, 0, None, None, "Final newline missing")],
    ),
    (
        "s030",
        "def fin():\n    return 5\n\n\n",
        [("C0305", 3, 0, None, None, "Trailing newlines")],
    ),
    (
        "s031",
        "LIMIT = 6\n\n",
        [("C0305", 2, 0, None, None, "Trailing newlines")],
    ),
    (
        "s032",
        "def flag(x):\n    if x: return 1\n    return 0\n",
        [("C0321", 2, 10, 2, 18, "More than one statement on a single line")],
    ),
    (
        "s033",
        "A = 1; B = 2\n",
        [("C0321", 1, 7, 1, 12, "More than one statement on a single line")],
    ),
    (
        "s034",
        "while True: break\n",
        [("C0321", 1, 12, 1, 17, "More than one statement on a single line")],
    ),
    (
        "s035",
        "def fetchData():\n    return 1\n",
        [("C0103", 1, 0, 1, 13, 'Function name "fetchData" doesn\'t conform to snake_case naming style')],
    ),
    (
        "s036",
        "def scale(v):\n    Factor = 2\n    return v * Factor\n",
        [("C0103", 2, 4, 2, 10, 'Variable name "Factor" doesn\'t conform to snake_case naming style')],
    ),
    (
        "s037",
        "limit = 10\n",
        [("C0103", 1, 0, 1, 5, 'Constant name "limit" doesn\'t conform to UPPER_CASE naming style')],
    ),
    (
        "s038",
        "def shift(Offset):\n    return Offset + 1\n",
        [("C0103", 1, 10, 1, 16, 'Argument name "Offset" doesn\'t conform to snake_case naming style')],
    ),
    (
        "s039",
        "MAX_SIZE = 10\n\ndef read_max():\n    return MAX_SIZE\n",
        [],
    ),
    (
        "s040",
        "def now():\n    import time\n    return time.time()\n",
        [("C0415", 2, 4, 2, 15, "Import outside toplevel (time)")],
    ),
    (
        "s041",
        "def join_path(a, b):\n    from os.path import join\n    return join(a, b)\n",
        [("C0415", 2, 4, 2, 28, "Import outside toplevel (os.path.join)")],
    ),
    (
        "s042",
        "def env():\n    import os, sys\n    return os.sep + sys.sep\n",
        [("C0415", 2, 4, 2, 18, "Import outside toplevel (os, sys)")],
    ),
    (
        "s043",
        "def sign(x):\n    if x >= 0:\n        return 1\n    else:\n        return -1\n",
        [("R1705", 2, 4, 5, 17, 'Unnecessary "else" after "return", remove the "else" and de-indent the code inside it')],
    ),
    (
        "s044",
        "def grade(s):\n    if s > 90:\n        return 'a'\n    elif s > 50:\n        return 'b'\n    return 'c'\n",
        [("R1705", 2, 4, 5, 18, 'Unnecessary "elif" after "return", remove the leading "el" from "elif"')],
    ),
    (
        "s045",
        "def clamp(x):\n    if x < 0:\n        return 0\n    return x\n",
        [],
    ),
    (
        "s046",
        "import re\n\ndef strip_digits(s):\n    extra = 'x'\n    return s\n",
        [
            ("W0611", 1, 0, 1, 9, "Unused import re"),
            ("W0612", 4, 4, 4, 9, "Unused variable 'extra'"),
        ],
    ),
    (
        "s047",
        "def boom():\n    raise Exception('x')",
        [
            ("W0719", 2, 4, 2, 24, "Raising too general exception: Exception"),
            ("C0304", 2, 0, None, None, "Final newline missing"),
        ],
    ),
    (
        "s048",
        "def quick(n):\n    if n: return n \n    return 0\n",
        [
            ("C0321", 2, 10, 2, 18, "More than one statement on a single line"),
            ("C0303", 2, 18, None, None, "Trailing whitespace"),
        ],
    ),
    (
        "s049",
        "def add(a, b):\n    return a + b\n\n\ndef sub(a, b):\n    return a - b\n",
        [],
    ),
    (
        "s050",
        "class Point:\n    def __init__(self, x, y):\n        self.x = x\n        self.y = y\n\n    def norm(self):\n        return abs(self.x) + abs(self.y)\n",
        [],
    ),
]


def canned_pylint_record(sample_id: str, smell: tuple) -> dict:
    msg_id, line, col, end_line, end_col, message = smell
    return {
        "type": _CATEGORY[msg_id[0]],
        "module": sample_id,
        "obj": "",
        "line": line,
        "column": col,
        "endLine": end_line,
        "endColumn": end_col,
        "path": f"{sample_id}.py",
        "symbol": SYMBOLS[msg_id],
        "message": message,
        "message-id": msg_id,
    }


def bridge_record(sample_id: str, smells: list[tuple]) -> dict:
    converted = [
        {
            "rule_id": msg_id,
            "symbol": SYMBOLS[msg_id],
            "start_line": line,
            "start_col": col,
            "end_line": end_line,
            "end_col": end_col,
            "message": message,
        }
        for msg_id, line, col, end_line, end_col, message in smells
    ]
    converted.sort(key=lambda s: (s["start_line"], s["start_col"], s["rule_id"]))
    return {"sample_id": sample_id, "linter_version": LINTER_VERSION, "smells": converted}


def render_json(payload: dict | list) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--check", action="store_true", help="verify files instead of writing")
    args = parser.parse_args()

    outputs: dict[Path, str] = {}
    for sample_id, source, smells in CORPUS:
        outputs[SNIPPET_DIR / f"{sample_id}.py"] = source
        outputs[CANNED_DIR / f"{sample_id}.json"] = render_json(
            [canned_pylint_record(sample_id, s) for s in smells]
        )
        outputs[GOLDEN_DIR / f"{sample_id}.json"] = render_json(bridge_record(sample_id, smells))

    stale = []
    for path, content in outputs.items():
        if args.check:
            if not path.exists() or path.read_text(encoding="utf-8") != content:
                stale.append(path)
        else:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(content, encoding="utf-8")
    if args.check:
        for path in stale:
            print(f"stale: {path}")
        return 1 if stale else 0
    print(f"wrote {len(outputs)} files for {len(CORPUS)} snippets")
    return 0


if __name__ == "__main__":
    sys.exit(main())
