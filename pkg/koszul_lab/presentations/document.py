"""
Presentation documents: JSON and a line-oriented text form.

JSON:
    {"name": "k3", "field": "rational", "order": "c>b>e>f>a>d",
     "generators": [{"label": "a", "weight": 1, "subset": [1], "aliases": ["u(1)"]}, ...],
     "relations": ["db - da + ab - ba", ...], "flags": []}

Text (what `present` writes):
    # name: k3
    # field: rational
    # order: c>b>e>f>a>d
    # generators: a:1:{1} b:1:{2} ...
    db - da + ab - ba
    ...
"""

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..algebra.fields import Field, field_from_name
from ..algebra.parse import parse_poly, render_poly
from ..algebra.words import MonomialOrder
from ..errors import ParseError, PresentationError
from ..quadratic.presentation import Presentation
from .typecheck import PresentationTypeChecker

_GENERATOR_RE = re.compile(r"^(?P<label>[^:\s]+):(?P<weight>\d+)(?::\{(?P<subset>[\d,]*)\})?$")


@dataclass(frozen=True)
class ResolvedSource:
    """A presentation plus the order its source suggests (None: generator order)."""
    presentation: Presentation
    order: Optional[str] = None

    def monomial_order(self, override: Optional[str] = None) -> MonomialOrder:
        gens = self.presentation.generators
        text = override or self.order
        if text:
            return MonomialOrder.parse(text, gens)
        return MonomialOrder(tuple(g.id for g in gens))


def presentation_to_document(presentation: Presentation, order: Optional[str] = None) -> Dict[str, Any]:
    gens = presentation.generators
    doc: Dict[str, Any] = {
        "name": presentation.name,
        "field": presentation.field.descriptor(),
        "generators": [
            {"label": g.label, "weight": g.weight, "subset": list(g.subset), "aliases": list(g.aliases)}
            for g in gens
        ],
        "relations": [render_poly(r, gens) for r in presentation.relations],
        "flags": sorted(presentation.flags),
    }
    if order:
        doc["order"] = order
    return doc


def document_to_presentation(data: Any, field: Optional[Field] = None) -> ResolvedSource:
    """
    Validate a document and build its presentation.

    Raises:
        PresentationError: the type checker reported errors
    """
    checker = PresentationTypeChecker()
    errors, _ = checker.check_document(data)
    if errors:
        raise PresentationError("invalid presentation document:\n  " + "\n  ".join(errors))
    doc_field = field_from_name(data.get("field", "rational"))
    gens = checker.generators
    relations = tuple(parse_poly(text, gens, doc_field) for text in data["relations"])
    presentation = Presentation(tuple(gens), relations, doc_field,
                                name=data.get("name", "presentation"),
                                flags=frozenset(data.get("flags", [])))
    if field is not None and field != doc_field:
        presentation = presentation.over(field)
    return ResolvedSource(presentation, data.get("order"))


def dump_text(presentation: Presentation, order: Optional[str] = None) -> str:
    gens = presentation.generators

    def generator_token(g) -> str:
        token = f"{g.label}:{g.weight}"
        if g.subset:
            token += ":{" + ",".join(map(str, g.subset)) + "}"
        return token

    lines = [f"# name: {presentation.name}", f"# field: {presentation.field.descriptor()}"]
    if order:
        lines.append(f"# order: {order}")
    if presentation.flags:
        lines.append(f"# flags: {','.join(sorted(presentation.flags))}")
    lines.append("# generators: " + " ".join(generator_token(g) for g in gens))
    lines.extend(render_poly(r, gens) for r in presentation.relations)
    return "\n".join(lines) + "\n"


def text_to_document(text: str) -> Dict[str, Any]:
    """Turn the text form into the JSON document shape (then type-checked as usual)."""
    doc: Dict[str, Any] = {"relations": []}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if not line.startswith("#"):
            doc["relations"].append(line)
            continue
        key, _, value = line[1:].partition(":")
        key, value = key.strip(), value.strip()
        if key == "generators":
            doc["generators"] = [_generator_entry(token, number) for token in value.split()]
        elif key == "flags":
            doc["flags"] = [f for f in value.split(",") if f]
        elif key in ("name", "field", "order"):
            doc[key] = value
    return doc


def _generator_entry(token: str, line: int) -> Dict[str, Any]:
    match = _GENERATOR_RE.match(token)
    if not match:
        raise ParseError(f"line {line}: bad generator entry {token!r}")
    subset = match.group("subset")
    return {
        "label": match.group("label"),
        "weight": int(match.group("weight")),
        "subset": [int(v) for v in subset.split(",") if v] if subset else [],
    }


def load_presentation(path: Union[str, Path], field: Optional[Field] = None) -> ResolvedSource:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: invalid JSON: {e}") from None
    else:
        data = text_to_document(text)
    return document_to_presentation(data, field)


def save_presentation(path: Union[str, Path], presentation: Presentation,
                      order: Optional[str] = None) -> Path:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(presentation_to_document(presentation, order), indent=2) + "\n")
    else:
        path.write_text(dump_text(presentation, order))
    return path
