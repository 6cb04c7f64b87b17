"""Avoidance counting and Hilbert series fitting."""

from .automaton import (
    Pattern, Automaton, DEAD, build_automaton, count, counts, brute_force_count,
    parse_patterns, render_pattern, render_patterns,
)
from .series import (
    SeriesFit, fit_recurrence, expand_series, rational_function, render_rational_function,
    series_equal, matches_expression, printed_coefficients, render_coefficients,
)

__all__ = [
    "Pattern", "Automaton", "DEAD", "build_automaton", "count", "counts", "brute_force_count",
    "parse_patterns", "render_pattern", "render_patterns",
    "SeriesFit", "fit_recurrence", "expand_series", "rational_function",
    "render_rational_function", "series_equal", "matches_expression",
    "printed_coefficients", "render_coefficients",
]
