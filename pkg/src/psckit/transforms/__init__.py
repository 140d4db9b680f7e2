"""Semantic-preserving statement-level code transformations."""

from .core import SiteSelector, Transformation, TransformKind, all_kinds, transform
from .equivalence import CallSpec, EquivalenceReport, check_equivalence
from .rename import (
    HttpSubstitutionProvider,
    default_substitution,
    first_char_substitution,
    rename_variable,
)

__all__ = [
    "CallSpec",
    "EquivalenceReport",
    "HttpSubstitutionProvider",
    "SiteSelector",
    "TransformKind",
    "Transformation",
    "all_kinds",
    "check_equivalence",
    "default_substitution",
    "first_char_substitution",
    "rename_variable",
    "transform",
]
