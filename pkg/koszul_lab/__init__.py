"""
Exact arithmetic for quadratic algebras built from graphs.

Computes with the algebra K_3 of the triangle, its associated graded
algebra gr(K_3), and the general Q_n(G) family: Gröbner-style completion,
Hilbert series from forbidden patterns, dual dimensions, the distributive
lattice certificate for Koszulness, and a re-derivation of the published
K_3 values.

Package structure:
- algebra/: Fields, words, polynomials and their text form
- rewrite/: Rewriting systems, ambiguities and completion
- counting/: Forbidden-pattern automata and rational series fitting
- linear/: Sparse echelon forms, subspaces and lattice operations
- quadratic/: Presentations, relation lattices, duals, certificates, eigenbasis
- presentations/: Builtin fixtures, graphs, documents and type checking
- models/: Pydantic payloads written by the CLI
- verify/: Published-value checks
- config/, utils/: Settings, logging and paths
"""

from .algebra import QQ, QQ_OMEGA, PrimeField, field_from_name, parse_poly, render_poly
from .config import DEFAULT_CONFIG, EngineConfig
from .counting import build_automaton, counts, fit_recurrence
from .errors import KoszulLabError
from .presentations import get_builtin, qn_graph_presentation, parse_graph, resolve_source
from .quadratic import Presentation, RelationLattice, dual_dims, koszul_certificate, quadratic_dual
from .rewrite import RewriteSystem, complete, forbidden_patterns

__version__ = "0.1.0"

__all__ = [
    'QQ',
    'QQ_OMEGA',
    'PrimeField',
    'field_from_name',
    'parse_poly',
    'render_poly',
    'DEFAULT_CONFIG',
    'EngineConfig',
    'build_automaton',
    'counts',
    'fit_recurrence',
    'KoszulLabError',
    'get_builtin',
    'qn_graph_presentation',
    'parse_graph',
    'resolve_source',
    'Presentation',
    'RelationLattice',
    'dual_dims',
    'quadratic_dual',
    'koszul_certificate',
    'RewriteSystem',
    'complete',
    'forbidden_patterns',
]
