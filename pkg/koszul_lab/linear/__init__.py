"""Exact sparse linear algebra over Q, Q(ω) and F_p."""

from .echelon import EchelonForm, axpy, rank, solve
from .subspace import (
    GradedComponent, Subspace, span, subspace_sum, intersect, intersect_all,
    contains, is_subspace, express_in_span,
)
from .lattice import (
    MedianPair, median_pair, distributive_triple, generated_sublattice, is_distributive_lattice,
)

__all__ = [
    "EchelonForm", "axpy", "rank", "solve",
    "GradedComponent", "Subspace", "span", "subspace_sum", "intersect", "intersect_all",
    "contains", "is_subspace", "express_in_span",
    "MedianPair", "median_pair", "distributive_triple", "generated_sublattice",
    "is_distributive_lattice",
]
