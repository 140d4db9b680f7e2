"""Transformation dispatch: pick sites, splice edits, verify the output parses."""

from __future__ import annotations

import ast
import random
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from ..errors import ParseError
from . import rename, statements
from .edits import Edit, apply_edits, parse_or_raise


class TransformKind(Enum):
    ADD_TO_EQUAL = "Add2Equal"
    SWITCH_EQUAL_EXP = "SwitchEqualExp"
    INFIX_DIVIDING = "InfixDividing"
    SWITCH_RELATION = "SwitchRelation"
    RENAME_VARIABLE_1 = "RenameVariable1"
    RENAME_VARIABLE_2 = "RenameVariable2"


class SiteSelector(Enum):
    ALL = "all"
    FIRST = "first"
    SEEDED_RANDOM = "seeded_random"


@dataclass(frozen=True)
class Transformation:
    """What was applied where: kind plus rewritten byte ranges of the input."""

    kind: TransformKind
    applied_sites: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ordered = sorted(self.applied_sites)
        for prev, cur in zip(ordered, ordered[1:]):
            if cur[0] < prev[1]:
                raise ValueError("applied sites overlap")


def _select(edits: Sequence[Edit], selector: SiteSelector, seed: int | None) -> list[Edit]:
    if not edits:
        return []
    if selector is SiteSelector.ALL:
        return list(edits)
    if selector is SiteSelector.FIRST:
        return [edits[0]]
    rng = random.Random(seed)
    return [edits[rng.randrange(len(edits))]]


def transform(
    snippet: str,
    kind: TransformKind,
    site_selector: SiteSelector = SiteSelector.ALL,
    *,
    seed: int | None = None,
    substitution_provider: rename.SubstitutionProvider | None = None,
) -> tuple[str, Transformation]:
    """Apply one transformation kind to a snippet.

    Returns the transformed snippet plus the record of rewritten ranges;
    when no site exists the output equals the input and the record is
    empty. Raises ParseError when the input does not parse.
    """
    tree = parse_or_raise(snippet, "transform input")
    src = snippet.encode("utf-8")

    if kind in (TransformKind.RENAME_VARIABLE_1, TransformKind.RENAME_VARIABLE_2):
        if kind is TransformKind.RENAME_VARIABLE_1:
            provider = rename.first_char_substitution
            min_length = 2
        else:
            provider = substitution_provider or rename.default_substitution
            min_length = 1
        sites = rename.rename_sites(tree, snippet, provider, min_length=min_length)
        if site_selector is SiteSelector.FIRST:
            sites = sites[:1]
        elif site_selector is SiteSelector.SEEDED_RANDOM and sites:
            rng = random.Random(seed)
            sites = [sites[rng.randrange(len(sites))]]
        edits = [e for site in sites for e in rename.site_edits(site)]
    elif kind is TransformKind.ADD_TO_EQUAL:
        edits = _select(statements.add_to_equal_sites(tree, src), site_selector, seed)
    elif kind is TransformKind.SWITCH_EQUAL_EXP:
        edits = _select(statements.switch_equal_sites(tree, src), site_selector, seed)
    elif kind is TransformKind.SWITCH_RELATION:
        edits = _select(statements.switch_relation_sites(tree, src), site_selector, seed)
    elif kind is TransformKind.INFIX_DIVIDING:
        temp = statements.fresh_temp_name(rename.all_identifiers(snippet))
        edits = _select(statements.infix_dividing_sites(tree, src, temp), site_selector, seed)
    else:  # pragma: no cover - enum is exhaustive
        raise ValueError(f"unknown transformation {kind!r}")

    if not edits:
        return snippet, Transformation(kind=kind, applied_sites=())

    out = apply_edits(src, edits).decode("utf-8")
    try:
        ast.parse(out)
    except SyntaxError as exc:  # a rewrite bug, not a user error
        raise ParseError(f"transformed output does not parse: {exc.msg}") from exc
    return out, Transformation(
        kind=kind,
        applied_sites=tuple(sorted((e.start, e.end) for e in edits)),
    )


def all_kinds() -> tuple[TransformKind, ...]:
    return tuple(TransformKind)
