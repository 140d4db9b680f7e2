#!/usr/bin/env python3
"""Regenerate the transformation corpus.

36 snippet bodies x 3 constant variants = 108 snippets, each a small
deterministic function exercising sites for the six transformations
(augmented assignments, equality and relational comparisons, compound
infix expressions, renameable locals). harness.json carries the call
specs the equivalence checker drives both versions through.

Usage: python tools/make_sect_corpus.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT_DIR = ROOT / "src" / "psckit" / "data" / "sect"

# (name, template with {k}, call specs with {k} substituted in args)
BODIES: list[tuple[str, str, list[dict]]] = [
    (
        "accumulate",
        "def accumulate(xs):\n    total = 0\n    for x in xs:\n        total += x + {k}\n    return total\n",
        [{"function": "accumulate", "args": [[1, 2, 3]]}, {"function": "accumulate", "args": [[]]}],
    ),
    (
        "countdown",
        "def countdown(start):\n    steps = 0\n    while start > 0:\n        start -= {k}\n        steps += 1\n    return steps\n",
        [{"function": "countdown", "args": [10]}, {"function": "countdown", "args": [0]}],
    ),
    (
        "is_match",
        "def is_match(a, b):\n    if a == b * {k}:\n        return True\n    return False\n",
        [{"function": "is_match", "args": [6, 2]}, {"function": "is_match", "args": [5, 5]}],
    ),
    (
        "clip",
        "def clip(value, low, high):\n    if value < low:\n        return low\n    if value > high:\n        return high\n    return value + {k}\n",
        [{"function": "clip", "args": [5, 0, 10]}, {"function": "clip", "args": [-3, 0, 10]}, {"function": "clip", "args": [42, 0, 10]}],
    ),
    (
        "polynomial",
        "def polynomial(a, b, c):\n    result = a + b * c + {k}\n    return result\n",
        [{"function": "polynomial", "args": [1, 2, 3]}, {"function": "polynomial", "args": [0, 0, 0]}],
    ),
    (
        "bigger_half",
        "def bigger_half(number):\n    half = number // 2\n    if number > half * 2:\n        half += {k}\n    return half\n",
        [{"function": "bigger_half", "args": [9]}, {"function": "bigger_half", "args": [8]}],
    ),
    (
        "word_score",
        "def word_score(word):\n    score = len(word) * {k}\n    if word == word.upper():\n        score += 10\n    return score\n",
        [{"function": "word_score", "args": ["abc"]}, {"function": "word_score", "args": ["ABC"]}],
    ),
    (
        "running_max",
        "def running_max(values):\n    best = None\n    for value in values:\n        if best is None:\n            best = value\n        elif value > best:\n            best = value\n    return best if best is None else best + {k}\n",
        [{"function": "running_max", "args": [[3, 8, 1]]}, {"function": "running_max", "args": [[]]}],
    ),
    (
        "balance",
        "def balance(deposits, withdrawals):\n    amount = 0\n    for d in deposits:\n        amount += d\n    for w in withdrawals:\n        amount -= w\n    return amount * {k}\n",
        [{"function": "balance", "args": [[10, 20], [5]]}, {"function": "balance", "args": [[], []]}],
    ),
    (
        "grade_band",
        "def grade_band(score):\n    if score >= 90 + {k}:\n        return 'high'\n    elif score >= 50:\n        return 'mid'\n    return 'low'\n",
        [{"function": "grade_band", "args": [95]}, {"function": "grade_band", "args": [60]}, {"function": "grade_band", "args": [10]}],
    ),
    (
        "same_parity",
        "def same_parity(a, b):\n    return a % 2 == b % 2 and a >= b - {k}\n",
        [{"function": "same_parity", "args": [4, 2]}, {"function": "same_parity", "args": [3, 2]}],
    ),
    (
        "scaled_area",
        "def scaled_area(width, height):\n    area = width * height + width * {k}\n    return area\n",
        [{"function": "scaled_area", "args": [3, 4]}, {"function": "scaled_area", "args": [0, 9]}],
    ),
    (
        "repeat_tail",
        "def repeat_tail(text, times):\n    out = ''\n    while times > 0:\n        out += text\n        times -= 1\n    return out + str({k})\n",
        [{"function": "repeat_tail", "args": ["ab", 3]}, {"function": "repeat_tail", "args": ["z", 0]}],
    ),
    (
        "vote",
        "def vote(yes, no):\n    margin = yes - no\n    if margin == {k}:\n        return 'tie-ish'\n    if margin > 0:\n        return 'pass'\n    return 'fail'\n",
        [{"function": "vote", "args": [5, 3]}, {"function": "vote", "args": [2, 6]}],
    ),
    (
        "digits_sum",
        "def digits_sum(number):\n    total = 0\n    while number > 0:\n        total += number % 10\n        number //= 10\n    return total + {k}\n",
        [{"function": "digits_sum", "args": [123]}, {"function": "digits_sum", "args": [0]}],
    ),
    (
        "bounded_ratio",
        "def bounded_ratio(num, den):\n    if den == 0:\n        raise ZeroDivisionError('den')\n    ratio = num / den + {k}\n    return ratio\n",
        [{"function": "bounded_ratio", "args": [6, 3]}, {"function": "bounded_ratio", "args": [1, 0]}],
    ),
    (
        "first_over",
        "def first_over(limit, values):\n    for index, value in enumerate(values):\n        if value > limit + {k}:\n            return index\n    return -1\n",
        [{"function": "first_over", "args": [2, [1, 2, 5]]}, {"function": "first_over", "args": [9, [1]]}],
    ),
    (
        "tax",
        "def tax(price):\n    rate = {k} / 100\n    total = price + price * rate\n    return total\n",
        [{"function": "tax", "args": [100]}, {"function": "tax", "args": [0]}],
    ),
    (
        "fizzish",
        "def fizzish(n):\n    label = ''\n    if n % 3 == 0:\n        label += 'fizz'\n    if n % 5 == {k}:\n        label += 'buzz'\n    return label or str(n)\n",
        [{"function": "fizzish", "args": [15]}, {"function": "fizzish", "args": [7]}],
    ),
    (
        "window_avg",
        "def window_avg(values, size):\n    if size <= 0:\n        raise ValueError('size')\n    window = values[:size]\n    total = 0\n    for v in window:\n        total += v\n    return total / size + {k}\n",
        [{"function": "window_avg", "args": [[2, 4, 6, 8], 2]}, {"function": "window_avg", "args": [[1], 0]}],
    ),
    (
        "chars_left",
        "def chars_left(budget, message):\n    budget -= len(message)\n    if budget < {k}:\n        return 0\n    return budget\n",
        [{"function": "chars_left", "args": [10, "hallo"]}, {"function": "chars_left", "args": [2, "hallo"]}],
    ),
    (
        "interest",
        "def interest(principal, years):\n    amount = principal\n    for year in range(years):\n        amount += amount * {k} // 100\n    return amount\n",
        [{"function": "interest", "args": [1000, 2]}, {"function": "interest", "args": [1000, 0]}],
    ),
    (
        "median3",
        "def median3(a, b, c):\n    if a > b:\n        a, b = b, a\n    if b > c:\n        b = c\n    if a > b:\n        b = a\n    return b + {k}\n",
        [{"function": "median3", "args": [3, 1, 2]}, {"function": "median3", "args": [9, 9, 1]}],
    ),
    (
        "count_eq",
        "def count_eq(values, target):\n    count = 0\n    for value in values:\n        if value == target:\n            count += {k}\n    return count\n",
        [{"function": "count_eq", "args": [[1, 2, 1], 1]}, {"function": "count_eq", "args": [[], 5]}],
    ),
    (
        "distance",
        "def distance(x1, y1, x2, y2):\n    dx = x2 - x1\n    dy = y2 - y1\n    squared = dx * dx + dy * dy + {k}\n    return squared\n",
        [{"function": "distance", "args": [0, 0, 3, 4]}, {"function": "distance", "args": [1, 1, 1, 1]}],
    ),
    (
        "shrink",
        "def shrink(size, minimum):\n    while size > minimum * {k}:\n        size -= minimum\n    return size\n",
        [{"function": "shrink", "args": [50, 7]}, {"function": "shrink", "args": [3, 7]}],
    ),
    (
        "letters",
        "def letters(text):\n    seen = []\n    for ch in text:\n        if ch not in seen:\n            seen.append(ch)\n    return len(seen) + {k}\n",
        [{"function": "letters", "args": ["banana"]}, {"function": "letters", "args": [""]}],
    ),
    (
        "safe_get",
        "def safe_get(items, index, default):\n    if index < 0:\n        return default\n    if index >= len(items):\n        return default\n    value = items[index] + {k}\n    return value\n",
        [{"function": "safe_get", "args": [[10, 20], 1, -1]}, {"function": "safe_get", "args": [[10], 5, -1]}],
    ),
    (
        "power_sum",
        "def power_sum(base, exponent):\n    total = 0\n    term = 1\n    for _ in range(exponent):\n        term *= base\n        total += term + {k}\n    return total\n",
        [{"function": "power_sum", "args": [2, 3]}, {"function": "power_sum", "args": [5, 0]}],
    ),
    (
        "normalize",
        "def normalize(value, low, high):\n    if high == low:\n        raise ValueError('range')\n    span = high - low\n    scaled = (value - low) / span + {k}\n    return scaled\n",
        [{"function": "normalize", "args": [5, 0, 10]}, {"function": "normalize", "args": [5, 3, 3]}],
    ),
    (
        "votes_needed",
        "def votes_needed(total_votes):\n    majority = total_votes // 2 + {k}\n    return majority\n",
        [{"function": "votes_needed", "args": [100]}, {"function": "votes_needed", "args": [1]}],
    ),
    (
        "strip_count",
        "def strip_count(lines):\n    kept = 0\n    for line in lines:\n        cleaned = line.strip()\n        if cleaned != '':\n            kept += {k}\n    return kept\n",
        [{"function": "strip_count", "args": [["a", " ", "b "]]}, {"function": "strip_count", "args": [[]]}],
    ),
    (
        "late_fee",
        "def late_fee(days):\n    fee = 0\n    if days > {k}:\n        fee = days * 2 + 1\n    return fee\n",
        [{"function": "late_fee", "args": [10]}, {"function": "late_fee", "args": [0]}],
    ),
    (
        "bounded_add",
        "def bounded_add(a, b, cap):\n    result = a + b\n    if result >= cap:\n        result = cap - {k}\n    return result\n",
        [{"function": "bounded_add", "args": [5, 6, 10]}, {"function": "bounded_add", "args": [1, 2, 10]}],
    ),
    (
        "swap_ends",
        "def swap_ends(items):\n    if len(items) < 2:\n        return list(items)\n    out = list(items)\n    out[0], out[-1] = out[-1], out[0]\n    return out + [{k}]\n",
        [{"function": "swap_ends", "args": [[1, 2, 3]]}, {"function": "swap_ends", "args": [[7]]}],
    ),
    (
        "harmonic",
        "def harmonic(n):\n    total = 0.0\n    for k in range(1, n + 1):\n        total += 1.0 / (k + {k})\n    return total\n",
        [{"function": "harmonic", "args": [4]}, {"function": "harmonic", "args": [0]}],
    ),
]

VARIANT_KS = (1, 2, 3)


def main() -> int:
    snippets_dir = OUT_DIR / "snippets"
    snippets_dir.mkdir(parents=True, exist_ok=True)
    harness: dict[str, list[dict]] = {}
    count = 0
    for name, template, calls in BODIES:
        for k in VARIANT_KS:
            sample_id = f"{name}_{k}"
            source = template.replace("{k}", str(k))
            compile(source, sample_id, "exec")  # corpus must parse
            (snippets_dir / f"{sample_id}.py").write_text(source, encoding="utf-8")
            harness[sample_id] = calls
            count += 1
    (OUT_DIR / "harness.json").write_text(
        json.dumps(harness, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(f"wrote {count} snippets + harness")
    return 0


if __name__ == "__main__":
    sys.exit(main())
