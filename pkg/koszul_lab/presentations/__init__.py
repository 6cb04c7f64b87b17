"""Graph algebras, built-in presentations and presentation documents."""

from .graphs import (
    Graph, parse_graph, load_graph, graph_generators, relation_families,
    relation_family_counts, qn_graph_presentation,
)
from .document import (
    ResolvedSource, presentation_to_document, document_to_presentation, dump_text,
    text_to_document, load_presentation, save_presentation,
)
from .typecheck import PresentationTypeChecker, typecheck_presentation
from .builtins import (
    BUILTINS, ALIASES, GRAPH_PREFIX, K3_ORDER, GR_K3_ORDER, Builtin, get_builtin, resolve_source,
    k3_fixture, gr_k3_fixture, free3_fixture, nonkoszul3_fixture, k3_generators,
)

__all__ = [
    "Graph", "parse_graph", "load_graph", "graph_generators", "relation_families",
    "relation_family_counts", "qn_graph_presentation",
    "ResolvedSource", "presentation_to_document", "document_to_presentation", "dump_text",
    "text_to_document", "load_presentation", "save_presentation",
    "PresentationTypeChecker", "typecheck_presentation",
    "BUILTINS", "ALIASES", "GRAPH_PREFIX", "K3_ORDER", "GR_K3_ORDER", "Builtin", "get_builtin",
    "resolve_source", "k3_fixture", "gr_k3_fixture", "free3_fixture", "nonkoszul3_fixture",
    "k3_generators",
]
