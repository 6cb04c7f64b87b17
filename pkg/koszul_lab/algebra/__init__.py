"""Free associative algebra: fields, words, monomial orders, polynomials, text syntax."""

from .fields import (
    Field, RationalField, CyclotomicField, PrimeField, CycloNumber, OMEGA,
    QQ, QQ_OMEGA, field_from_name, embed, parse_rational, render_rational,
)
from .words import (
    Word, EMPTY_WORD, Generator, MonomialOrder, Ordering, compare, word_concat,
    find_factor, word_weight, slot_weights, render_word, label_index,
)
from .poly import Poly, poly_mul, leading_term, commutator
from .parse import parse_poly, render_poly, parse_word

__all__ = [
    "Field", "RationalField", "CyclotomicField", "PrimeField", "CycloNumber", "OMEGA",
    "QQ", "QQ_OMEGA", "field_from_name", "embed", "parse_rational", "render_rational",
    "Word", "EMPTY_WORD", "Generator", "MonomialOrder", "Ordering", "compare",
    "word_concat", "find_factor", "word_weight", "slot_weights", "render_word", "label_index",
    "Poly", "poly_mul", "leading_term", "commutator",
    "parse_poly", "render_poly", "parse_word",
]
