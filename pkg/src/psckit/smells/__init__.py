"""Smell detection: native rule engine plus external-linter bridge ingest."""

from .engine import RULE_SYMBOLS, SYNTAX_ERROR_ID, RuleSet, detect
from .ingest import ingest_diagnostics, parse_diagnostics

__all__ = [
    "RULE_SYMBOLS",
    "SYNTAX_ERROR_ID",
    "RuleSet",
    "detect",
    "ingest_diagnostics",
    "parse_diagnostics",
]
