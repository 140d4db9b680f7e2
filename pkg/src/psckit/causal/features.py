"""Confounder extraction from snippets.

Structural counts come from the ast and the token stream; lexical
category counts come from a deterministic heuristic tagger (identifier
splitting on underscores/camelCase plus a small embedded lexicon), or
from an external annotations file when higher fidelity is needed. The
features are adjustment covariates, not results, so the tagger favors
determinism over linguistic accuracy.
"""

from __future__ import annotations

import ast
import io
import json
import re
import tokenize
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

POS_CATEGORIES = ("noun", "proper_noun", "verb", "adjective", "numeral", "interjection")

_VERBS = frozenset(
    """get set run make build compute calc calculate add remove delete update
    create read write load save parse format check validate find search sort
    filter map apply send receive open close start stop init initialize
    convert merge split join fetch print log raise return yield handle
    process extract encode decode render emit collect count sum normalize
    is has can should do""".split()
)
_NOUNS = frozenset(
    """count value number data list dict set string text name item index
    result total line file path token tree node graph table row column
    user key map array buffer queue stack length size width height error
    message code source target input output config option argument
    parameter function method class module object type state flag
    score label group batch record field sample rule span trace""".split()
)
_ADJECTIVES = frozenset(
    """new old max min last first next prev current valid invalid empty
    full true false long short big small high low fast slow safe raw
    final total mean median relative absolute global local static dynamic
    temp tmp""".split()
)
_INTERJECTIONS = frozenset("oops wow hey ugh huh yay ouch".split())
_NUMBER_WORDS = frozenset(
    "zero one two three four five six seven eight nine ten hundred thousand".split()
)

_CAMEL_SPLIT = re.compile(r"[A-Z]?[a-z0-9]+|[A-Z]+(?![a-z])")


@dataclass(frozen=True)
class FeatureVector:
    """Per-sample confounders: structural and lexical-category counts."""

    loc: int
    token_count: int
    ast_nodes: int
    identifiers: int
    ast_height: int
    syntax_errors: int
    whitespace_count: int
    word_count: int
    vocab_size: int
    pos_counts: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.vocab_size > self.word_count:
            raise ValueError("vocab_size cannot exceed word_count")
        if self.ast_height > self.ast_nodes:
            raise ValueError("ast_height cannot exceed ast_nodes")
        counts = {cat: int(self.pos_counts.get(cat, 0)) for cat in POS_CATEGORIES}
        object.__setattr__(self, "pos_counts", counts)

    def as_row(self) -> dict[str, int]:
        row = {
            "loc": self.loc,
            "token_count": self.token_count,
            "ast_nodes": self.ast_nodes,
            "identifiers": self.identifiers,
            "ast_height": self.ast_height,
            "syntax_errors": self.syntax_errors,
            "whitespace_count": self.whitespace_count,
            "word_count": self.word_count,
            "vocab_size": self.vocab_size,
        }
        for cat in POS_CATEGORIES:
            row[f"pos_{cat}"] = self.pos_counts[cat]
        return row


FEATURE_COLUMNS = tuple(
    [
        "loc",
        "token_count",
        "ast_nodes",
        "identifiers",
        "ast_height",
        "syntax_errors",
        "whitespace_count",
        "word_count",
        "vocab_size",
    ]
    + [f"pos_{cat}" for cat in POS_CATEGORIES]
)


def split_identifier(name: str) -> list[str]:
    """Split snake_case and camelCase identifiers into lowercase words."""
    words = []
    for chunk in name.split("_"):
        words.extend(m.group(0).lower() for m in _CAMEL_SPLIT.finditer(chunk))
    return words


def tag_word(word: str, capitalized: bool) -> str:
    if word in _INTERJECTIONS:
        return "interjection"
    if word in _NUMBER_WORDS or word.isdigit():
        return "numeral"
    if word in _VERBS:
        return "verb"
    if word in _ADJECTIVES:
        return "adjective"
    if capitalized:
        return "proper_noun"
    return "noun"


def _count_tokens(source: str) -> tuple[int, list[str]]:
    """(meaningful token count, identifier-ish token texts)."""
    skip = {
        tokenize.ENCODING,
        tokenize.ENDMARKER,
        tokenize.NEWLINE,
        tokenize.NL,
        tokenize.INDENT,
        tokenize.DEDENT,
        tokenize.COMMENT,
    }
    count = 0
    names = []
    try:
        for tok in tokenize.generate_tokens(io.StringIO(source).readline):
            if tok.type in skip:
                continue
            count += 1
            if tok.type == tokenize.NAME:
                names.append(tok.string)
    except (tokenize.TokenError, IndentationError, SyntaxError):
        for word in re.findall(r"\w+|[^\w\s]", source):
            count += 1
            if word.isidentifier():
                names.append(word)
    return count, names


def _pos_counts(source: str, names: list[str]) -> dict[str, int]:
    counts = {cat: 0 for cat in POS_CATEGORIES}
    for name in names:
        for word in split_identifier(name):
            capitalized = bool(name[:1].isupper())
            counts[tag_word(word, capitalized)] += 1
    for _ in re.findall(r"\b\d+(?:\.\d+)?\b", source):
        counts["numeral"] += 1
    return counts


def _ast_height(node: ast.AST) -> int:
    children = list(ast.iter_child_nodes(node))
    if not children:
        return 1
    return 1 + max(_ast_height(c) for c in children)


def extract_features(
    snippet: str, pos_annotations: Mapping[str, int] | None = None
) -> FeatureVector:
    """Deterministic feature extraction; unparseable snippets degrade.

    A snippet that fails to parse gets syntax_errors=1 and zeroed ast
    fields; every other feature still comes from the raw text.
    """
    if not snippet:
        return FeatureVector(0, 0, 0, 0, 0, 0, 0, 0, 0, {})

    loc = sum(1 for line in snippet.split("\n") if line.strip())
    whitespace_count = sum(1 for ch in snippet if ch in " \t\n\r")
    words = snippet.split()
    word_count = len(words)
    vocab_size = len(set(words))
    token_count, names = _count_tokens(snippet)

    try:
        tree = ast.parse(snippet)
        syntax_errors = 0
        ast_nodes = sum(1 for _ in ast.walk(tree))
        ast_height = _ast_height(tree)
        identifiers = sum(
            1 for n in ast.walk(tree) if isinstance(n, (ast.Name, ast.arg))
        )
    except SyntaxError:
        syntax_errors = 1
        ast_nodes = 0
        ast_height = 0
        identifiers = 0

    pos = dict(pos_annotations) if pos_annotations is not None else _pos_counts(snippet, names)
    return FeatureVector(
        loc=loc,
        token_count=token_count,
        ast_nodes=ast_nodes,
        identifiers=identifiers,
        ast_height=ast_height,
        syntax_errors=syntax_errors,
        whitespace_count=whitespace_count,
        word_count=word_count,
        vocab_size=vocab_size,
        pos_counts=pos,
    )


def load_pos_annotations(path: str | Path) -> dict[str, dict[str, int]]:
    """External annotations: {sample_id: {category: count}}."""
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(payload, dict):
        raise ValueError("annotations file must map sample ids to category counts")
    return {
        sample_id: {cat: int(counts.get(cat, 0)) for cat in POS_CATEGORIES}
        for sample_id, counts in payload.items()
    }
