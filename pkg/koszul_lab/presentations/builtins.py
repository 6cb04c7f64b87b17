"""
Built-in presentations and how sources on the command line resolve to them.

    k3          Q_3(K_3) with letters a=u(1) b=u(2) c=u(3) d=u(12) e=u(23) f=u(13)
    gr-k3       its associated graded (alias ch-k3), flagged k3-like
    free3       free algebra on x, y, z
    nonkoszul3  x, y, z with xy = 0 and yz = x²; fails the certificate in degree 4
    qn-graph:<path>  Q_n(G) for a graph file
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List

from ..algebra.fields import Field, QQ
from ..algebra.parse import parse_poly
from ..algebra.words import Generator
from ..errors import PresentationError
from ..quadratic.presentation import K3_LIKE, Presentation
from .document import ResolvedSource, load_presentation
from .graphs import load_graph, qn_graph_presentation

K3_RELATIONS = (
    "db - da + ab - ba",
    "ec - eb + bc - cb",
    "fa - fc + ca - ac",
    "de - ed - fd + fe + dc - cd + ae - ea",
    "df - fd - ed + ef + dc - cd + bf - fb",
)

GR_K3_RELATIONS = (
    "db - da",
    "ec - eb",
    "fa - fc",
    "de - ed - fd + fe",
    "df - fd - ed + ef",
)

K3_ORDER = "c>b>e>f>a>d"
GR_K3_ORDER = "f>e>d>c>b>a"
XYZ_ORDER = "x>y>z"


def k3_generators() -> List[Generator]:
    return [
        Generator(0, "a", 1, (1,), ("u(1)",)),
        Generator(1, "b", 1, (2,), ("u(2)",)),
        Generator(2, "c", 1, (3,), ("u(3)",)),
        Generator(3, "d", 2, (1, 2), ("u(12)", "u(1,2)")),
        Generator(4, "e", 2, (2, 3), ("u(23)", "u(2,3)")),
        Generator(5, "f", 2, (1, 3), ("u(13)", "u(1,3)")),
    ]


def xyz_generators() -> List[Generator]:
    return [Generator(i, label) for i, label in enumerate("xyz")]


def _build(name: str, generators: List[Generator], relations, flags=()) -> Presentation:
    polys = tuple(parse_poly(text, generators, QQ) for text in relations)
    return Presentation(tuple(generators), polys, QQ, name=name, flags=frozenset(flags))


def k3_fixture() -> Presentation:
    """The five relations r1..r5 exactly as listed, not canonicalized."""
    return _build("k3", k3_generators(), K3_RELATIONS)


def gr_k3_fixture() -> Presentation:
    return _build("gr-k3", k3_generators(), GR_K3_RELATIONS, flags=(K3_LIKE,))


def free3_fixture() -> Presentation:
    return _build("free3", xyz_generators(), ())


def nonkoszul3_fixture() -> Presentation:
    return _build("nonkoszul3", xyz_generators(), ("xy", "yz - xx"))


@dataclass(frozen=True)
class Builtin:
    name: str
    factory: Callable[[], Presentation]
    order: str
    description: str


BUILTINS: Dict[str, Builtin] = {
    b.name: b for b in (
        Builtin("k3", k3_fixture, K3_ORDER, "Q_3(K_3), relations r1..r5"),
        Builtin("gr-k3", gr_k3_fixture, GR_K3_ORDER, "associated graded of Q_3(K_3)"),
        Builtin("free3", free3_fixture, XYZ_ORDER, "free algebra on three generators"),
        Builtin("nonkoszul3", nonkoszul3_fixture, XYZ_ORDER, "relations xy, yz - x^2"),
    )
}
ALIASES = {"ch-k3": "gr-k3"}
GRAPH_PREFIX = "qn-graph:"


def get_builtin(name: str) -> Builtin:
    key = ALIASES.get(name, name)
    if key not in BUILTINS:
        raise PresentationError(
            f"unknown builtin {name!r}; available: {', '.join(sorted(list(BUILTINS) + list(ALIASES)))}"
        )
    return BUILTINS[key]


def resolve_source(source: str, field: Field = QQ) -> ResolvedSource:
    """
    Builtin name, `qn-graph:<path>`, or a presentation document path.

    Raises:
        PresentationError: unknown builtin or invalid document
        GraphFormatError: malformed graph file
        FileNotFoundError: missing file
    """
    if source.startswith(GRAPH_PREFIX):
        path = Path(source[len(GRAPH_PREFIX):])
        presentation = qn_graph_presentation(load_graph(path), name=f"qn-graph:{path.name}")
        return ResolvedSource(presentation.over(field))
    if source in BUILTINS or source in ALIASES:
        builtin = get_builtin(source)
        return ResolvedSource(builtin.factory().over(field), builtin.order)
    path = Path(source)
    if path.exists() or path.suffix in (".json", ".txt", ".pres"):
        return load_presentation(path, field)
    raise PresentationError(f"{source!r} is neither a builtin, a qn-graph source, nor a file")
