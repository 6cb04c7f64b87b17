"""Rewriting systems, ambiguity resolution and degree-bounded completion."""

from .system import Rule, RewriteSystem, reduce
from .ambiguities import Ambiguity, find_ambiguities, s_polynomial, is_resolved
from .completion import (
    AmbiguityRecord, Completion, complete, complete_relations,
    family_coefficient, conjecture_family, forbidden_patterns,
)
from .serialize import dump_system, load_system

__all__ = [
    "Rule", "RewriteSystem", "reduce",
    "Ambiguity", "find_ambiguities", "s_polynomial", "is_resolved",
    "AmbiguityRecord", "Completion", "complete", "complete_relations",
    "family_coefficient", "conjecture_family", "forbidden_patterns",
    "dump_system", "load_system",
]
