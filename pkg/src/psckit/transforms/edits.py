"""Byte-splice editing over ast positions.

Transformations rewrite explicit byte ranges of the original source and
leave every other byte untouched, so formatting smells are neither
created nor destroyed by accident. ast column offsets are UTF-8 byte
offsets, which makes the arithmetic exact for multi-byte text.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass

from ..errors import ParseError


@dataclass(frozen=True)
class Edit:
    """Replace original bytes [start, end) with the replacement."""

    start: int
    end: int
    replacement: bytes

    def __post_init__(self):
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"invalid edit range [{self.start},{self.end})")


def line_starts(src: bytes) -> list[int]:
    starts = [0]
    for k, ch in enumerate(src):
        if ch == 0x0A:
            starts.append(k + 1)
    return starts


def node_range(node: ast.AST, starts: list[int]) -> tuple[int, int]:
    start = starts[node.lineno - 1] + node.col_offset
    end = starts[node.end_lineno - 1] + node.end_col_offset
    return start, end


def apply_edits(src: bytes, edits: list[Edit]) -> bytes:
    ordered = sorted(edits, key=lambda e: e.start)
    for prev, cur in zip(ordered, ordered[1:]):
        if cur.start < prev.end:
            raise ValueError(f"overlapping edits at byte {cur.start}")
    out = bytearray()
    cursor = 0
    for edit in ordered:
        out += src[cursor : edit.start]
        out += edit.replacement
        cursor = edit.end
    out += src[cursor:]
    return bytes(out)


def parse_or_raise(source: str, context: str) -> ast.Module:
    try:
        return ast.parse(source)
    except SyntaxError as exc:
        raise ParseError(f"{context}: {exc.msg} (line {exc.lineno})") from exc


def drop_nested(edits: list[Edit]) -> list[Edit]:
    """Keep outermost sites when candidate ranges nest or overlap."""
    kept: list[Edit] = []
    for edit in sorted(edits, key=lambda e: (e.start, -(e.end - e.start))):
        if kept and edit.start < kept[-1].end:
            continue
        kept.append(edit)
    return kept
