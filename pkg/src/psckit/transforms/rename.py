"""Variable renaming for the two rename transformations.

A variable qualifies for renaming when every occurrence of its
identifier sits in a single scope, it is bound by an assignment-like
statement (parameters are excluded so harness calls by keyword keep
working), and it is not subject to global/nonlocal declarations. The
replacement name must not appear anywhere in the snippet, which rules
out capture without alias analysis.
"""

from __future__ import annotations

import ast
import io
import json
import keyword
import tokenize
import urllib.request
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..errors import RenameCollisionError
from .edits import Edit, line_starts, node_range

SubstitutionProvider = Callable[[str], "str | None"]

_SUBSTITUTION_TABLE = {
    "number": "myNumber",
    "count": "myCount",
    "value": "myValue",
    "result": "myResult",
    "total": "myTotal",
    "index": "myIndex",
    "item": "myItem",
    "text": "myText",
    "data": "myData",
    "name": "myName",
}


def default_substitution(name: str) -> str | None:
    """Deterministic embedded substitution table plus camelCase augmentation."""
    if name in _SUBSTITUTION_TABLE:
        return _SUBSTITUTION_TABLE[name]
    parts = [p for p in name.split("_") if p]
    if len(parts) > 1:
        return parts[0] + "".join(p[0].upper() + p[1:] for p in parts[1:])
    if not name:
        return None
    return "my" + name[0].upper() + name[1:]


def first_char_substitution(name: str) -> str | None:
    if len(name) < 2:
        return None
    return name[0]


class HttpSubstitutionProvider:
    """Fetch substitutes from a model-serving endpoint.

    POST {base_url}/v1/substitutions with {"name": ...}; the response
    carries {"substitute": ...}. Any transport failure yields None so a
    corpus run degrades to skipped sites instead of aborting.
    """

    def __init__(self, base_url: str, timeout: float = 10.0):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout

    def __call__(self, name: str) -> str | None:
        request = urllib.request.Request(
            f"{self.base_url}/v1/substitutions",
            data=json.dumps({"name": name}).encode("utf-8"),
            headers={"Content-Type": "application/json"},
        )
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as response:
                payload = json.loads(response.read().decode("utf-8"))
        except (OSError, ValueError):
            return None
        substitute = payload.get("substitute")
        return substitute if isinstance(substitute, str) and substitute.isidentifier() else None


@dataclass
class _ScopeInfo:
    """Occurrences and bindings of one identifier across the snippet."""

    scopes: set[int] = field(default_factory=set)
    occurrences: list[ast.Name] = field(default_factory=list)
    assigned_in: set[int] = field(default_factory=set)
    is_param: bool = False
    declared: bool = False  # subject of a global/nonlocal statement


class _NameIndexer(ast.NodeVisitor):
    def __init__(self):
        self.names: dict[str, _ScopeInfo] = {}
        self._scope_stack = [0]
        self._next_scope = 1

    def _info(self, name: str) -> _ScopeInfo:
        return self.names.setdefault(name, _ScopeInfo())

    def visit_Name(self, node: ast.Name):
        info = self._info(node.id)
        info.scopes.add(self._scope_stack[-1])
        info.occurrences.append(node)
        if isinstance(node.ctx, ast.Store):
            info.assigned_in.add(self._scope_stack[-1])
        self.generic_visit(node)

    def _enter_scope(self, node: ast.AST):
        self._scope_stack.append(self._next_scope)
        self._next_scope += 1
        self.generic_visit(node)
        self._scope_stack.pop()

    def visit_FunctionDef(self, node: ast.FunctionDef):
        self._mark_args(node)
        self._enter_scope(node)

    def visit_AsyncFunctionDef(self, node: ast.AsyncFunctionDef):
        self._mark_args(node)
        self._enter_scope(node)

    def visit_Lambda(self, node: ast.Lambda):
        for arg in node.args.args + node.args.posonlyargs + node.args.kwonlyargs:
            info = self._info(arg.arg)
            info.is_param = True
        self._enter_scope(node)

    def visit_ClassDef(self, node: ast.ClassDef):
        self._enter_scope(node)

    def _mark_args(self, node: ast.FunctionDef | ast.AsyncFunctionDef):
        a = node.args
        args = list(a.posonlyargs) + list(a.args) + list(a.kwonlyargs)
        if a.vararg:
            args.append(a.vararg)
        if a.kwarg:
            args.append(a.kwarg)
        for arg in args:
            info = self._info(arg.arg)
            info.is_param = True

    def visit_Global(self, node: ast.Global):
        for name in node.names:
            self._info(name).declared = True

    def visit_Nonlocal(self, node: ast.Nonlocal):
        for name in node.names:
            self._info(name).declared = True


def all_identifiers(source: str) -> set[str]:
    """Every NAME token in the snippet (strings and comments excluded)."""
    names = set()
    try:
        for tok in tokenize.generate_tokens(io.StringIO(source).readline):
            if tok.type == tokenize.NAME:
                names.add(tok.string)
    except (tokenize.TokenError, IndentationError):
        pass
    return names


@dataclass(frozen=True)
class RenameSite:
    """One renameable variable with all its occurrence ranges."""

    old: str
    new: str
    ranges: tuple[tuple[int, int], ...]


def rename_sites(
    tree: ast.Module,
    source: str,
    substitute: SubstitutionProvider,
    *,
    min_length: int = 1,
) -> list[RenameSite]:
    """Renameable variables in document order of first occurrence."""
    indexer = _NameIndexer()
    indexer.visit(tree)
    src = source.encode("utf-8")
    starts = line_starts(src)
    taken = all_identifiers(source) | set(keyword.kwlist)

    sites = []
    ordered = sorted(
        indexer.names.items(),
        key=lambda kv: min(
            (n.lineno, n.col_offset) for n in kv[1].occurrences
        )
        if kv[1].occurrences
        else (1 << 30, 0),
    )
    for name, info in ordered:
        if not info.occurrences or info.is_param or info.declared:
            continue
        if len(info.scopes) != 1 or not info.assigned_in:
            continue
        if len(name) < min_length or name.startswith("_"):
            continue
        new = substitute(name)
        if not new or new == name or not new.isidentifier():
            continue
        if new in taken:
            continue
        taken.add(new)
        ranges = tuple(sorted(node_range(n, starts) for n in info.occurrences))
        sites.append(RenameSite(old=name, new=new, ranges=ranges))
    return sites


def site_edits(site: RenameSite) -> list[Edit]:
    return [Edit(start, end, site.new.encode("utf-8")) for start, end in site.ranges]


def rename_variable(source: str, old: str, new: str) -> str:
    """Rename one variable, raising RenameCollisionError when unsafe."""
    import ast as _ast

    tree = _ast.parse(source)
    if not new.isidentifier() or keyword.iskeyword(new):
        raise RenameCollisionError(f"{new!r} is not a usable identifier")
    if new in all_identifiers(source):
        raise RenameCollisionError(f"{new!r} is already bound in scope")
    sites = {s.old: s for s in rename_sites(tree, source, lambda n: new if n == old else None)}
    if old not in sites:
        raise RenameCollisionError(f"{old!r} is not a renameable variable here")
    from .edits import apply_edits

    return apply_edits(source.encode("utf-8"), site_edits(sites[old])).decode("utf-8")


def iter_occurrence_ranges(sites: Iterable[RenameSite]) -> list[tuple[int, int]]:
    out = []
    for site in sites:
        out.extend(site.ranges)
    return sorted(out)
