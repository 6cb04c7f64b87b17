"""
Text format for completed rewriting systems.

    # generators: a:1:{1} b:1:{2} c:1:{3} d:2:{1,2} e:2:{2,3} f:2:{1,3}
    # order: c>b>e>f>a>d
    # cap: 6
    # field: rational
    db -> da
    fe -> ef + df - de

Rules are listed by (degree, lhs rank under the order). The format carries no
timestamps, so equal systems serialize to equal bytes.
"""

import re
from typing import List

from ..algebra.fields import field_from_name
from ..algebra.parse import parse_poly, parse_word, render_poly
from ..algebra.words import Generator, MonomialOrder, render_word
from ..errors import ParseError
from .system import RewriteSystem, Rule

_GENERATOR_RE = re.compile(r"^(?P<label>[^:\s]+):(?P<weight>\d+)(?::\{(?P<subset>[\d,]*)\})?$")


def _render_generator(g: Generator) -> str:
    text = f"{g.label}:{g.weight}"
    if g.subset:
        text += ":{" + ",".join(map(str, g.subset)) + "}"
    return text


def _parse_generator(index: int, token: str) -> Generator:
    match = _GENERATOR_RE.match(token)
    if not match:
        raise ParseError(f"bad generator entry {token!r}")
    subset = match.group("subset")
    return Generator(index, match.group("label"), int(match.group("weight")),
                     tuple(int(v) for v in subset.split(",") if v) if subset else ())


def dump_system(system: RewriteSystem) -> str:
    gens = system.generators
    sep = "" if all(len(g.label) == 1 for g in gens) else "*"
    lines = [
        "# generators: " + " ".join(_render_generator(g) for g in gens),
        f"# order: {system.order.render(gens)}",
        f"# cap: {system.degree_cap if system.degree_cap is not None else '-'}",
        f"# field: {system.field.descriptor()}",
    ]
    for rule in sorted(system.rules, key=lambda r: system.order.key(r.lhs)):
        lines.append(f"{render_word(rule.lhs, gens, sep)} -> {render_poly(rule.rhs, gens, system.order)}")
    return "\n".join(lines) + "\n"


def load_system(text: str) -> RewriteSystem:
    """
    Parse dump_system() output back into a RewriteSystem.

    Raises:
        ParseError: missing header, unknown generator, or malformed rule line
    """
    header = {}
    rule_lines: List[str] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            header[key.strip()] = value.strip()
        elif "->" in line:
            rule_lines.append(line)
        else:
            raise ParseError(f"line {number}: expected 'lhs -> rhs', got {line!r}")
    for key in ("generators", "order", "field"):
        if key not in header:
            raise ParseError(f"missing '# {key}:' header")

    generators = [_parse_generator(i, token) for i, token in enumerate(header["generators"].split())]
    order = MonomialOrder.parse(header["order"], generators)
    field = field_from_name(header["field"])
    cap_text = header.get("cap", "-")
    system = RewriteSystem(generators, order, field,
                           degree_cap=None if cap_text == "-" else int(cap_text))
    for line in rule_lines:
        lhs_text, _, rhs_text = line.partition("->")
        lhs = parse_word(lhs_text, generators)
        if not lhs:
            raise ParseError(f"empty left-hand side in {line!r}")
        system.add_rule(Rule(lhs, parse_poly(rhs_text, generators, field)))
    return system
