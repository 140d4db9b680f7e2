"""Map a smell diagnostic's source range to the token span it covers.

Line/column positions convert to byte offsets assuming 1-based lines and
0-based columns counted in bytes of the line. A diagnostic whose byte
range begins inside a multi-byte token includes the whole token: spans
are token-granular.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import SmellDiagnostic, TokenTrace
from .errors import MissingSegmentError, UnalignableError

FILE_TAIL_RULES = frozenset({"C0304", "C0305"})


class Coverage(Enum):
    EXACT = "exact"
    LINE = "line"
    FILE_TAIL = "file_tail"


@dataclass(frozen=True)
class TokenSpan:
    """Inclusive token-index range [i, j] with how it was derived."""

    i: int
    j: int
    coverage: Coverage

    def __post_init__(self):
        if not 0 <= self.i <= self.j:
            raise ValueError(f"invalid token span ({self.i}, {self.j})")

    def check_within(self, trace: TokenTrace) -> None:
        if self.j >= len(trace.tokens):
            raise ValueError(
                f"span ({self.i}, {self.j}) exceeds trace of {len(trace.tokens)} tokens"
            )

    def __len__(self) -> int:
        return self.j - self.i + 1


def _byte_at(line_offsets: list[int], source_len: int, line: int, col: int) -> int:
    if line < 1 or line > len(line_offsets):
        raise UnalignableError(f"line {line} outside the source")
    return min(line_offsets[line - 1] + col, source_len)


def diagnostic_byte_range(diag: SmellDiagnostic, trace: TokenTrace) -> tuple[int, int]:
    """Half-open byte range [start, end) flagged by the diagnostic."""
    offsets = trace.line_byte_offsets()
    src_len = len(trace.source.encode("utf-8"))
    start = _byte_at(offsets, src_len, diag.start_line, diag.start_col)
    if diag.has_end:
        end = _byte_at(offsets, src_len, diag.end_line, diag.end_col)
        return start, max(end, start + 1)
    if diag.start_col > 0:
        return start, start + 1
    # Column-less diagnostic: the whole flagged line, newline included.
    if diag.start_line < len(offsets):
        end = offsets[diag.start_line]
    else:
        end = src_len
    return start, max(end, start + 1)


def align(diag: SmellDiagnostic, trace: TokenTrace) -> TokenSpan:
    """Smallest contiguous token span covering the diagnostic's byte range.

    File-end rules (missing final newline, trailing newlines) cover the
    final span-carrying token. Column-less diagnostics cover every token
    on the flagged line. Raises UnalignableError when the range falls in
    a region with no spanned tokens.
    """
    if diag.sample_id != trace.sample_id:
        raise ValueError(
            f"diagnostic sample {diag.sample_id!r} does not match trace {trace.sample_id!r}"
        )
    spanned = trace.span_token_indices()
    if not spanned:
        raise UnalignableError("trace has no span-carrying tokens")

    if diag.rule_id in FILE_TAIL_RULES:
        last = spanned[-1]
        return TokenSpan(last, last, Coverage.FILE_TAIL)

    start, end = diagnostic_byte_range(diag, trace)
    hit = [
        k
        for k in spanned
        if trace.tokens[k].byte_start < end and trace.tokens[k].byte_end > start
    ]
    if not hit:
        raise UnalignableError(
            f"{diag.rule_id} byte range [{start},{end}) is covered by no tokens"
        )
    coverage = Coverage.EXACT if (diag.has_end or diag.start_col > 0) else Coverage.LINE
    return TokenSpan(hit[0], hit[-1], coverage)


def in_generated_segment(span: TokenSpan, trace: TokenTrace) -> bool:
    """Whether the span starts at or after the model-generated segment.

    Spans overlapping the prefix/generated boundary report False (strict
    containment); traces without a marker raise MissingSegmentError.
    """
    if trace.generated_from is None:
        raise MissingSegmentError(f"trace {trace.sample_id!r} has no generated_from marker")
    span.check_within(trace)
    return trace.tokens[span.i].byte_start >= trace.generated_from
