"""Native smell detection over Python source.

Implements a documented subset of linter rules: formatting checks work on
physical lines, the rest on the ast. Positions follow linter conventions
(1-based lines, 0-based columns); unparseable snippets yield a single
distinguished syntax-error diagnostic instead of failing.

Unused-name analysis is intra-function and name-binding based, with no
aliasing analysis; a name loaded anywhere in the relevant subtree counts
as used.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from typing import Final, Iterable

from ..core import SmellDiagnostic
from ..errors import SchemaError

SYNTAX_ERROR_ID: Final = "E0001"

RULE_SYMBOLS: Final = {
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

GOOD_NAMES: Final = frozenset({"i", "j", "k", "ex", "Run", "_"})
BROAD_EXCEPTIONS: Final = frozenset({"Exception", "BaseException"})


@dataclass(frozen=True)
class RuleSet:
    """Enabled rule ids plus the line-length limit."""

    rules: frozenset[str] = frozenset(RULE_SYMBOLS)
    max_line_length: int = 100

    def __post_init__(self):
        object.__setattr__(self, "rules", frozenset(self.rules))
        unknown = self.rules - set(RULE_SYMBOLS)
        if unknown:
            raise SchemaError(f"unknown rule ids: {sorted(unknown)}")
        if self.max_line_length < 1:
            raise SchemaError("max_line_length must be positive")

    def enabled(self, rule_id: str) -> bool:
        return rule_id in self.rules


def _is_snake_case(name: str) -> bool:
    if name in GOOD_NAMES:
        return True
    if not name:
        return False
    if name[0] not in "abcdefghijklmnopqrstuvwxyz_":
        return False
    return all(c.isdigit() or c == "_" or ("a" <= c <= "z") for c in name[1:])


def _is_const_name(name: str) -> bool:
    if name.startswith("__") and name.endswith("__"):
        return True
    if not name or name[0] not in "ABCDEFGHIJKLMNOPQRSTUVWXYZ_":
        return False
    return all(c.isdigit() or c == "_" or ("A" <= c <= "Z") for c in name)


def _is_stub_body(body: list[ast.stmt]) -> bool:
    stmts = body
    if (
        stmts
        and isinstance(stmts[0], ast.Expr)
        and isinstance(stmts[0].value, ast.Constant)
        and isinstance(stmts[0].value.value, str)
    ):
        stmts = stmts[1:]
    if not stmts:
        return True
    if len(stmts) == 1:
        s = stmts[0]
        if isinstance(s, ast.Pass):
            return True
        if isinstance(s, ast.Expr) and isinstance(s.value, ast.Constant) and s.value.value is ...:
            return True
        if isinstance(s, ast.Raise):
            return True
    return False


def _decorator_names(node: ast.FunctionDef | ast.AsyncFunctionDef) -> set[str]:
    names = set()
    for dec in node.decorator_list:
        target = dec.func if isinstance(dec, ast.Call) else dec
        if isinstance(target, ast.Name):
            names.add(target.id)
        elif isinstance(target, ast.Attribute):
            names.add(target.attr)
    return names


@dataclass
class _Finding:
    rule_id: str
    line: int
    col: int
    end_line: int | None
    end_col: int | None
    message: str


class _AstChecks(ast.NodeVisitor):
    """Single-pass collector for the ast-based rules."""

    def __init__(self, rules: RuleSet):
        self.rules = rules
        self.findings: list[_Finding] = []
        self._func_stack: list[ast.FunctionDef | ast.AsyncFunctionDef] = []
        self._class_depth = 0
        self._loads: set[str] = set()
        self._pending_imports: list[ast.Import | ast.ImportFrom] = []

    def _add(self, rule_id: str, line: int, col: int, end_line, end_col, message: str):
        if self.rules.enabled(rule_id):
            self.findings.append(_Finding(rule_id, line, col, end_line, end_col, message))

    # -- naming ------------------------------------------------------------

    def _check_function_name(self, node: ast.FunctionDef | ast.AsyncFunctionDef):
        if _is_snake_case(node.name):
            return
        kind = "Method" if getattr(node, "_is_method", False) else "Function"
        head_offset = len("async def " if isinstance(node, ast.AsyncFunctionDef) else "def ")
        self._add(
            "C0103",
            node.lineno,
            node.col_offset,
            node.lineno,
            node.col_offset + head_offset + len(node.name),
            f'{kind} name "{node.name}" doesn\'t conform to snake_case naming style',
        )

    def _check_arg_names(self, node: ast.FunctionDef | ast.AsyncFunctionDef):
        for arg in _all_args(node):
            if not _is_snake_case(arg.arg):
                self._add(
                    "C0103",
                    arg.lineno,
                    arg.col_offset,
                    arg.lineno,
                    arg.col_offset + len(arg.arg),
                    f'Argument name "{arg.arg}" doesn\'t conform to snake_case naming style',
                )

    def _check_bound_name(self, name_node: ast.Name):
        """Name-style check for assignment targets.

        Module-level assignments are constants (UPPER_CASE); targets inside
        functions are variables (snake_case). Loop/with/comprehension
        targets are not style-checked.
        """
        name = name_node.id
        if self._func_stack:
            ok, style, kind = _is_snake_case(name), "snake_case", "Variable"
        else:
            ok, style, kind = _is_const_name(name), "UPPER_CASE", "Constant"
        if not ok:
            self._add(
                "C0103",
                name_node.lineno,
                name_node.col_offset,
                name_node.lineno,
                name_node.col_offset + len(name),
                f'{kind} name "{name}" doesn\'t conform to {style} naming style',
            )

    # -- imports -----------------------------------------------------------

    def _import_display(self, node: ast.Import | ast.ImportFrom, alias: ast.alias) -> str:
        if isinstance(node, ast.Import):
            base = alias.name
        else:
            base = f"{node.module or ''}.{alias.name}".lstrip(".")
        if alias.asname:
            return f"{base} as {alias.asname}"
        return base

    def _check_import(self, node: ast.Import | ast.ImportFrom):
        if self._func_stack and self.rules.enabled("C0415"):
            if isinstance(node, ast.Import):
                names = ", ".join(a.name for a in node.names)
            else:
                names = ", ".join(
                    f"{node.module or ''}.{a.name}".lstrip(".") for a in node.names
                )
            self._add(
                "C0415",
                node.lineno,
                node.col_offset,
                node.end_lineno,
                node.end_col_offset,
                f"Import outside toplevel ({names})",
            )
        self._pending_imports.append(node)

    # -- defaults / raises / returns ----------------------------------------

    def _check_defaults(self, node: ast.FunctionDef | ast.AsyncFunctionDef):
        defaults = list(node.args.defaults) + [d for d in node.args.kw_defaults if d]
        for default in defaults:
            text = None
            if isinstance(default, (ast.List, ast.Dict, ast.Set)):
                text = ast.unparse(default)
            elif (
                isinstance(default, ast.Call)
                and isinstance(default.func, ast.Name)
                and default.func.id in {"list", "dict", "set"}
                and not default.args
                and not default.keywords
            ):
                text = ast.unparse(default)
            if text is not None:
                self._add(
                    "W0102",
                    node.lineno,
                    node.col_offset,
                    node.end_lineno,
                    node.end_col_offset,
                    f"Dangerous default value {text} as argument",
                )

    def visit_Raise(self, node: ast.Raise):
        exc = node.exc
        target = exc.func if isinstance(exc, ast.Call) else exc
        if isinstance(target, ast.Name) and target.id in BROAD_EXCEPTIONS:
            self._add(
                "W0719",
                node.lineno,
                node.col_offset,
                node.end_lineno,
                node.end_col_offset,
                f"Raising too general exception: {target.id}",
            )
        self.generic_visit(node)

    def visit_If(self, node: ast.If):
        if not getattr(node, "_is_elif", False) and node.orelse:
            if node.body and isinstance(node.body[-1], ast.Return):
                elif_chain = (
                    len(node.orelse) == 1
                    and isinstance(node.orelse[0], ast.If)
                    and node.orelse[0].col_offset == node.col_offset
                )
                if elif_chain:
                    message = (
                        'Unnecessary "elif" after "return", '
                        'remove the leading "el" from "elif"'
                    )
                else:
                    message = (
                        'Unnecessary "else" after "return", '
                        'remove the "else" and de-indent the code inside it'
                    )
                self._add(
                    "R1705",
                    node.lineno,
                    node.col_offset,
                    node.end_lineno,
                    node.end_col_offset,
                    message,
                )
        # Mark elif children so chains report once, at the chain head.
        current = node
        while len(current.orelse) == 1 and isinstance(current.orelse[0], ast.If):
            child = current.orelse[0]
            if child.col_offset != current.col_offset:
                break
            child._is_elif = True  # type: ignore[attr-defined]
            current = child
        self.generic_visit(node)

    # -- scope bookkeeping ---------------------------------------------------

    def visit_Module(self, node: ast.Module):
        self.generic_visit(node)
        self._flush_unused_imports(node)

    def visit_ClassDef(self, node: ast.ClassDef):
        for stmt in node.body:
            if isinstance(stmt, (ast.FunctionDef, ast.AsyncFunctionDef)):
                stmt._is_method = True  # type: ignore[attr-defined]
        self._class_depth += 1
        self.generic_visit(node)
        self._class_depth -= 1

    def visit_Assign(self, node: ast.Assign):
        for target in node.targets:
            for name_node in _flatten_targets(target):
                self._check_bound_name(name_node)
        self.generic_visit(node)

    def visit_AnnAssign(self, node: ast.AnnAssign):
        if node.value is not None:
            for name_node in _flatten_targets(node.target):
                self._check_bound_name(name_node)
        self.generic_visit(node)

    def visit_FunctionDef(self, node: ast.FunctionDef):
        self._visit_function(node)

    def visit_AsyncFunctionDef(self, node: ast.AsyncFunctionDef):
        self._visit_function(node)

    def _visit_function(self, node: ast.FunctionDef | ast.AsyncFunctionDef):
        self._check_function_name(node)
        self._check_arg_names(node)
        self._check_defaults(node)
        self._func_stack.append(node)
        self.generic_visit(node)
        self._func_stack.pop()
        self._check_unused_locals(node)
        self._check_unused_args(node)

    def visit_Import(self, node: ast.Import):
        self._check_import(node)

    def visit_ImportFrom(self, node: ast.ImportFrom):
        self._check_import(node)

    def visit_Name(self, node: ast.Name):
        if not isinstance(node.ctx, ast.Store):
            self._loads.add(node.id)
        self.generic_visit(node)

    # -- unused-name analyses --------------------------------------------------

    def _flush_unused_imports(self, module: ast.Module):
        if not self.rules.enabled("W0611"):
            return
        loads = set(self._loads) | _dunder_all_names(module)
        for node in self._pending_imports:
            for alias in node.names:
                if isinstance(node, ast.ImportFrom) and alias.name == "*":
                    continue
                bound = alias.asname or alias.name.split(".")[0]
                if bound in loads:
                    continue
                if isinstance(node, ast.Import):
                    if alias.asname:
                        message = f"Unused {alias.name} imported as {alias.asname}"
                    else:
                        message = f"Unused import {alias.name}"
                else:
                    source = node.module or ""
                    if alias.asname:
                        message = (
                            f"Unused {alias.name} imported from {source} as {alias.asname}"
                        )
                    else:
                        message = f"Unused {alias.name} imported from {source}"
                self._add(
                    "W0611",
                    node.lineno,
                    node.col_offset,
                    node.end_lineno,
                    node.end_col_offset,
                    message,
                )

    def _check_unused_locals(self, func: ast.FunctionDef | ast.AsyncFunctionDef):
        if not self.rules.enabled("W0612"):
            return
        arg_names = {a.arg for a in _all_args(func)}
        bindings: dict[str, ast.Name] = {}
        for stmt in _own_scope_nodes(func):
            targets: Iterable[ast.expr] = ()
            if isinstance(stmt, ast.Assign):
                targets = stmt.targets
            elif isinstance(stmt, ast.AnnAssign) and stmt.value is not None:
                targets = (stmt.target,)
            elif isinstance(stmt, (ast.For, ast.AsyncFor)):
                targets = (stmt.target,)
            elif isinstance(stmt, (ast.With, ast.AsyncWith)):
                targets = tuple(
                    item.optional_vars for item in stmt.items if item.optional_vars
                )
            for target in targets:
                for name_node in _flatten_targets(target):
                    if name_node.id.startswith("_") or name_node.id in arg_names:
                        continue
                    bindings.setdefault(name_node.id, name_node)
        used = _loaded_names(func)
        for name, node in bindings.items():
            if name not in used:
                self._add(
                    "W0612",
                    node.lineno,
                    node.col_offset,
                    node.lineno,
                    node.col_offset + len(name),
                    f"Unused variable '{name}'",
                )

    def _check_unused_args(self, func: ast.FunctionDef | ast.AsyncFunctionDef):
        if not self.rules.enabled("W0613"):
            return
        if _is_stub_body(func.body):
            return
        if _decorator_names(func) & {"abstractmethod", "overload", "override"}:
            return
        args = _all_args(func)
        is_method = getattr(func, "_is_method", False)
        if is_method and args and "staticmethod" not in _decorator_names(func):
            args = args[1:]
        used = _loaded_names(func)
        for arg in args:
            if arg.arg.startswith("_") or arg.arg in {"self", "cls"}:
                continue
            if arg.arg not in used:
                self._add(
                    "W0613",
                    arg.lineno,
                    arg.col_offset,
                    arg.lineno,
                    arg.col_offset + len(arg.arg),
                    f"Unused argument '{arg.arg}'",
                )


def _all_args(node: ast.FunctionDef | ast.AsyncFunctionDef) -> list[ast.arg]:
    a = node.args
    return list(a.posonlyargs) + list(a.args) + list(a.kwonlyargs)


def _flatten_targets(target: ast.expr) -> Iterable[ast.Name]:
    if isinstance(target, ast.Name):
        yield target
    elif isinstance(target, (ast.Tuple, ast.List)):
        for elt in target.elts:
            yield from _flatten_targets(elt)
    elif isinstance(target, ast.Starred):
        yield from _flatten_targets(target.value)


_SCOPE_BOUNDARIES = (ast.FunctionDef, ast.AsyncFunctionDef, ast.ClassDef, ast.Lambda)


def _own_scope_nodes(func: ast.AST) -> Iterable[ast.AST]:
    """Walk a function body without descending into nested scopes."""
    stack: list[ast.AST] = list(ast.iter_child_nodes(func))
    while stack:
        node = stack.pop()
        if isinstance(node, _SCOPE_BOUNDARIES):
            continue
        yield node
        stack.extend(ast.iter_child_nodes(node))


def _loaded_names(scope: ast.AST) -> set[str]:
    loaded = set()
    for node in ast.walk(scope):
        if isinstance(node, ast.Name) and not isinstance(node.ctx, ast.Store):
            loaded.add(node.id)
        elif isinstance(node, ast.AugAssign) and isinstance(node.target, ast.Name):
            loaded.add(node.target.id)
        elif isinstance(node, ast.NamedExpr) and isinstance(node.target, ast.Name):
            loaded.add(node.target.id)
    return loaded


def _dunder_all_names(module: ast.Module) -> set[str]:
    names = set()
    for stmt in module.body:
        if isinstance(stmt, ast.Assign) and any(
            isinstance(t, ast.Name) and t.id == "__all__" for t in stmt.targets
        ):
            if isinstance(stmt.value, (ast.List, ast.Tuple)):
                for elt in stmt.value.elts:
                    if isinstance(elt, ast.Constant) and isinstance(elt.value, str):
                        names.add(elt.value)
    return names


def _line_checks(source: str, rules: RuleSet) -> list[_Finding]:
    findings = []
    lines = source.split("\n")
    physical = lines[:-1] if lines and lines[-1] == "" else lines

    for idx, line in enumerate(physical, start=1):
        stripped = line.rstrip("\r")
        if rules.enabled("C0301") and len(stripped) > rules.max_line_length:
            findings.append(
                _Finding(
                    "C0301",
                    idx,
                    0,
                    None,
                    None,
                    f"Line too long ({len(stripped)}/{rules.max_line_length})",
                )
            )
        if rules.enabled("C0303") and stripped != stripped.rstrip(" \t"):
            findings.append(
                _Finding("C0303", idx, len(stripped.rstrip(" \t")), None, None, "Trailing whitespace")
            )

    if source and rules.enabled("C0304") and not source.endswith("\n"):
        findings.append(_Finding("C0304", len(physical), 0, None, None, "Final newline missing"))

    if rules.enabled("C0305") and physical:
        last_content = 0
        for idx, line in enumerate(physical, start=1):
            if line.strip():
                last_content = idx
        if 0 < last_content < len(physical):
            findings.append(
                _Finding("C0305", last_content + 1, 0, None, None, "Trailing newlines")
            )
    return findings


def _multi_statement_checks(tree: ast.Module, rules: RuleSet) -> list[_Finding]:
    if not rules.enabled("C0321"):
        return []
    stmts = sorted(
        (node for node in ast.walk(tree) if isinstance(node, ast.stmt)),
        key=lambda n: (n.lineno, n.col_offset),
    )
    findings = []
    flagged_lines: set[int] = set()
    seen_lines: set[int] = set()
    for node in stmts:
        if node.lineno in seen_lines and node.lineno not in flagged_lines:
            flagged_lines.add(node.lineno)
            findings.append(
                _Finding(
                    "C0321",
                    node.lineno,
                    node.col_offset,
                    node.end_lineno,
                    node.end_col_offset,
                    "More than one statement on a single line",
                )
            )
        seen_lines.add(node.lineno)
    return findings


def detect(snippet: str, rules: RuleSet | None = None, sample_id: str = "") -> list[SmellDiagnostic]:
    """Detect smells in one snippet, ordered by (line, column, rule id).

    A snippet that fails to parse yields one syntax-error diagnostic;
    detection is deterministic and pure.
    """
    rules = rules or RuleSet()
    try:
        tree = ast.parse(snippet)
    except SyntaxError as exc:
        return [
            SmellDiagnostic(
                sample_id=sample_id,
                rule_id=SYNTAX_ERROR_ID,
                symbol="syntax-error",
                start_line=max(exc.lineno or 1, 1),
                start_col=max((exc.offset or 1) - 1, 0),
                message=exc.msg or "invalid syntax",
            )
        ]

    checker = _AstChecks(rules)
    checker.visit(tree)
    findings = checker.findings
    findings.extend(_line_checks(snippet, rules))
    findings.extend(_multi_statement_checks(tree, rules))

    diags = [
        SmellDiagnostic(
            sample_id=sample_id,
            rule_id=f.rule_id,
            symbol=RULE_SYMBOLS[f.rule_id],
            start_line=f.line,
            start_col=f.col,
            end_line=f.end_line,
            end_col=f.end_col,
            message=f.message,
        )
        for f in findings
    ]
    diags.sort(key=lambda d: (d.start_line, d.start_col, d.rule_id))
    return diags
