"""Statement-level rewrite transformations.

Each finder yields non-overlapping candidate edits in document order.
Operand text is always sliced from the original source, so spacing
inside untouched subexpressions survives verbatim.
"""

from __future__ import annotations

import ast
import re

from .edits import Edit, drop_nested, line_starts, node_range

_EQ_GAP = re.compile(rb"^\s*==\s*$")
_REL_GAP = re.compile(rb"^\s*(<=|>=|<|>)\s*$")
_REL_MIRROR = {b"<": b">", b">": b"<", b"<=": b">=", b">=": b"<="}


def add_to_equal_sites(tree: ast.Module, src: bytes) -> list[Edit]:
    """a += 9  ->  a = a + 9 (add/subtract assignments on plain names)."""
    starts = line_starts(src)
    edits = []
    for node in ast.walk(tree):
        if not isinstance(node, ast.AugAssign):
            continue
        if not isinstance(node.op, (ast.Add, ast.Sub)):
            continue
        if not isinstance(node.target, ast.Name):
            continue
        op = b"+" if isinstance(node.op, ast.Add) else b"-"
        v_start, v_end = node_range(node.value, starts)
        name = node.target.id.encode("utf-8")
        start, end = node_range(node, starts)
        replacement = name + b" = " + name + b" " + op + b" " + src[v_start:v_end]
        edits.append(Edit(start, end, replacement))
    return edits


def _swap_compare_sites(tree: ast.Module, src: bytes, gap_re, mirror) -> list[Edit]:
    starts = line_starts(src)
    candidates = []
    for node in ast.walk(tree):
        if not isinstance(node, ast.Compare) or len(node.ops) != 1:
            continue
        left, right = node.left, node.comparators[0]
        l_start, l_end = node_range(left, starts)
        r_start, r_end = node_range(right, starts)
        gap = src[l_end:r_start]
        match = gap_re.match(gap)
        if not match:
            continue
        op = match.group(1) if match.groups() else b"=="
        new_op = mirror[op] if mirror else op
        op_at = gap.index(op)
        pre, post = gap[:op_at], gap[op_at + len(op) :]
        replacement = src[r_start:r_end] + pre + new_op + post + src[l_start:l_end]
        candidates.append(Edit(l_start, r_end, replacement))
    return drop_nested(candidates)


def switch_equal_sites(tree: ast.Module, src: bytes) -> list[Edit]:
    """a == b  ->  b == a (single equality comparisons)."""
    return _swap_compare_sites(tree, src, _EQ_GAP, None)


def switch_relation_sites(tree: ast.Module, src: bytes) -> list[Edit]:
    """a > b  ->  b < a (operand swap with operator mirroring)."""
    return _swap_compare_sites(tree, src, _REL_GAP, _REL_MIRROR)


def _extractable_operand(value: ast.BinOp) -> ast.expr | None:
    for operand in (value.left, value.right):
        if isinstance(operand, (ast.BinOp, ast.UnaryOp)):
            return operand
    return None


def infix_dividing_sites(tree: ast.Module, src: bytes, temp_name: str) -> list[Edit]:
    """x = a + b * c  ->  temp = b * c / x = a + temp."""
    starts = line_starts(src)
    edits = []
    temp = temp_name.encode("utf-8")
    for node in ast.walk(tree):
        if not isinstance(node, ast.Assign) or not isinstance(node.value, ast.BinOp):
            continue
        operand = _extractable_operand(node.value)
        if operand is None:
            continue
        stmt_start, stmt_end = node_range(node, starts)
        line_start = starts[node.lineno - 1]
        indent = src[line_start:stmt_start]
        if indent.strip():
            continue  # statement shares its line; no clean insertion point
        op_start, op_end = node_range(operand, starts)
        stmt_src = src[stmt_start:stmt_end]
        rewritten = (
            stmt_src[: op_start - stmt_start] + temp + stmt_src[op_end - stmt_start :]
        )
        op_src = src[op_start:op_end]
        replacement = temp + b" = " + op_src + b"\n" + indent + rewritten
        edits.append(Edit(stmt_start, stmt_end, replacement))
    return edits


def fresh_temp_name(identifiers: set[str], base: str = "temp") -> str:
    """The transformation's fresh name, suffixing _2, _3, ... on collision."""
    if base not in identifiers:
        return base
    k = 2
    while f"{base}_{k}" in identifiers:
        k += 1
    return f"{base}_{k}"
