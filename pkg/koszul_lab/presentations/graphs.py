"""
Graph algebras Q_n(G).

For a simple graph G on vertices 1..n the algebra is generated by u(i)
(weight 1) and u(i,j) for edges {i,j} (weight 2), with u(i,j) = 0 for
non-edges, subject to

  (i)   [u(i),u(j)] − u(i,j)(u(i) − u(j))                                   i < j
  (ii)  [u(i,k),u(j,k)] + [u(i,k),u(j)] + [u(i),u(j,k)] − u(i,j)(u(i,k) − u(j,k))
                                                                           i, j, k distinct
  (iii) [u(i,j),u(k,l)]                                  {i,j}, {k,l} disjoint edges

Every relation is stored as left side minus right side.
"""

import json
import re
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from ..algebra.fields import Field, QQ
from ..algebra.poly import Poly, commutator, poly_mul
from ..algebra.words import Generator
from ..errors import GraphFormatError
from ..quadratic.presentation import Presentation

Edge = Tuple[int, int]
_EDGE_RE = re.compile(r"^(\d+)-(\d+)$")
_HEADER_RE = re.compile(r"^n\s*=\s*(\d+)$")


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..vertex_count."""
    vertex_count: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphFormatError(f"negative vertex count {self.vertex_count}")
        normalized = set()
        for i, j in self.edges:
            if i == j:
                raise GraphFormatError(f"loop at vertex {i}")
            if not (1 <= i <= self.vertex_count and 1 <= j <= self.vertex_count):
                raise GraphFormatError(f"edge {i}-{j} leaves the vertex range 1..{self.vertex_count}")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, 'edges', frozenset(normalized))

    @classmethod
    def complete(cls, n: int) -> 'Graph':
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def describe(self) -> str:
        edges = " ".join(f"{i}-{j}" for i, j in self.sorted_edges())
        return f"n={self.vertex_count}; {edges}".rstrip()


def parse_graph(text: str) -> Graph:
    """
    Parse `n=4; 1-2 2-3 3-4` or JSON {"n": 4, "edges": [[1, 2], ...]}.

    Raises:
        GraphFormatError: malformed text, repeated edge, loop or vertex out of range
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        return _parse_graph_json(stripped)
    head, _, body = stripped.partition(";")
    match = _HEADER_RE.match(head.strip())
    if not match:
        raise GraphFormatError(f"expected 'n=<count>;' header, got {head.strip()!r}")
    edges: List[Edge] = []
    for token in body.replace(",", " ").split():
        edge = _EDGE_RE.match(token)
        if not edge:
            raise GraphFormatError(f"bad edge token {token!r}; expected i-j")
        edges.append((int(edge.group(1)), int(edge.group(2))))
    return _build(int(match.group(1)), edges)


def _parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"invalid graph JSON: {e}") from None
    if not isinstance(data, dict) or "n" not in data:
        raise GraphFormatError("graph JSON needs an 'n' field")
    n = data["n"]
    if not isinstance(n, int):
        raise GraphFormatError(f"'n' must be an integer, got {type(n).__name__}")
    edges = []
    for k, item in enumerate(data.get("edges", [])):
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(v, int) for v in item)):
            raise GraphFormatError(f"edges[{k}] must be a pair of integers")
        edges.append((item[0], item[1]))
    return _build(n, edges)


def _build(n: int, edges: List[Edge]) -> Graph:
    seen = set()
    for i, j in edges:
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphFormatError(f"edge {i}-{j} listed twice")
        seen.add(key)
    return Graph(n, frozenset(edges))


def load_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(Path(path).read_text())


def _vertex_label(i: int) -> str:
    return f"u({i})"


def _edge_labels(i: int, j: int, n: int) -> Tuple[str, Tuple[str, ...]]:
    if n < 10:
        return f"u({i}{j})", (f"u({i},{j})",)
    return f"u({i},{j})", ()


def graph_generators(graph: Graph) -> List[Generator]:
    """u(1..n) then one generator per edge, in sorted edge order."""
    gens = [Generator(i - 1, _vertex_label(i), 1, (i,)) for i in range(1, graph.vertex_count + 1)]
    for i, j in graph.sorted_edges():
        label, aliases = _edge_labels(i, j, graph.vertex_count)
        gens.append(Generator(len(gens), label, 2, (i, j), aliases))
    return gens


class _Symbols:
    """u(i) and u(i,j) as polynomials; non-edges give zero."""

    def __init__(self, graph: Graph, generators: List[Generator], field: Field):
        self.field = field
        self.graph = graph
        self.ids = {g.subset: g.id for g in generators}

    def vertex(self, i: int) -> Poly:
        return Poly.monomial((self.ids[(i,)],), 1, self.field)

    def edge(self, i: int, j: int) -> Poly:
        key = (min(i, j), max(i, j))
        if key not in self.ids:
            return Poly.zero(self.field)
        return Poly.monomial((self.ids[key],), 1, self.field)


def relation_families(graph: Graph, field: Field = QQ) -> Dict[str, List[Poly]]:
    """Raw instances of the three families, zero instances dropped."""
    gens = graph_generators(graph)
    u = _Symbols(graph, gens, field)
    vertices = range(1, graph.vertex_count + 1)
    families: Dict[str, List[Poly]] = {"i": [], "ii": [], "iii": []}

    for i in vertices:
        for j in vertices:
            if i < j:
                r = commutator(u.vertex(i), u.vertex(j)) - poly_mul(u.edge(i, j), u.vertex(i) - u.vertex(j))
                families["i"].append(r)

    for i, j, k in permutations(vertices, 3):
        r = (commutator(u.edge(i, k), u.edge(j, k))
             + commutator(u.edge(i, k), u.vertex(j))
             + commutator(u.vertex(i), u.edge(j, k))
             - poly_mul(u.edge(i, j), u.edge(i, k) - u.edge(j, k)))
        families["ii"].append(r)

    edges = graph.sorted_edges()
    for first in edges:
        for second in edges:
            if first != second and not set(first) & set(second):
                families["iii"].append(commutator(u.edge(*first), u.edge(*second)))

    return {name: [r for r in rels if not r.is_zero()] for name, rels in families.items()}


def relation_family_counts(graph: Graph) -> Dict[str, int]:
    """Number of nonzero raw instances per family."""
    return {name: len(rels) for name, rels in relation_families(graph).items()}


def qn_graph_presentation(graph: Graph, field: Field = QQ, name: Optional[str] = None) -> Presentation:
    """Canonical presentation of Q_n(G): every family instance, reduced to an RREF basis."""
    families = relation_families(graph, field)
    relations = families["i"] + families["ii"] + families["iii"]
    presentation = Presentation(tuple(graph_generators(graph)), tuple(relations), field,
                                name=name or f"qn-graph({graph.describe()})")
    return presentation.canonical()
