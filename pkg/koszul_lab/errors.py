"""
Exception hierarchy for koszul_lab.

Library code raises these; the CLI maps the input-shaped ones (parse, graph,
presentation, ambient mismatch) to exit code 2 and everything else that marks
a failed check to exit code 1.
"""


class KoszulLabError(Exception):
    """Base class for all koszul_lab errors."""
    pass


class FieldError(KoszulLabError, ArithmeticError):
    """Arithmetic that the coefficient field cannot perform (division by zero, bad embedding)."""
    pass


class FieldMismatchError(FieldError):
    """Two operands live over different coefficient fields."""
    pass


class ZeroPolynomialError(KoszulLabError, ValueError):
    """A leading term was requested from the zero polynomial."""
    pass


class ParseError(KoszulLabError, ValueError):
    """Text input (polynomial, pattern, rewrite system) could not be parsed."""
    pass


class GraphFormatError(ParseError):
    """Malformed graph input: bad edge, loop, vertex out of range."""
    pass


class PresentationError(KoszulLabError, ValueError):
    """A presentation violates its invariants (non-quadratic relation, bad document, missing symmetry)."""
    pass


class AmbientMismatchError(KoszulLabError, ValueError):
    """Subspaces or vectors from different graded components were combined."""
    pass


class CompletionError(KoszulLabError, RuntimeError):
    """Completion gave up: runaway rule growth or a pivot the field cannot invert."""
    pass


class SublatticeLimitError(KoszulLabError, RuntimeError):
    """Closure of subspaces under sum and intersection exceeded its element limit."""
    pass


class RuleNotFoundError(KoszulLabError, KeyError):
    """No rule with the requested left-hand side exists in the system."""
    pass


class AutomatonError(KoszulLabError, ValueError):
    """Invalid forbidden-pattern set (empty word, letter outside the alphabet)."""
    pass


class RecurrenceFitError(KoszulLabError):
    """No linear recurrence of the allowed order fits the counts."""
    pass


# Errors that mean "the user gave us bad input" rather than "a check failed".
INPUT_ERRORS = (ParseError, PresentationError, AmbientMismatchError, AutomatonError, FileNotFoundError)
