"""
Type checker for presentation documents.

Validates:
- Required fields exist with correct types
- Generator labels are unique and weights positive
- The field name is known
- Every relation parses and is quadratic
- The suggested order (if any) ranks every generator exactly once

Errors block construction; warnings (unexpected fields, dependent relations)
are reported and ignored.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Set, Tuple

from ..algebra.fields import QQ, field_from_name
from ..algebra.parse import parse_poly
from ..algebra.words import Generator
from ..errors import FieldError, KoszulLabError
from ..linear.subspace import GradedComponent, span

ALLOWED_TOP_LEVEL = {'name', 'field', 'generators', 'relations', 'flags', 'order', 'description'}
ALLOWED_GENERATOR_FIELDS = {'label', 'weight', 'subset', 'aliases'}


class PresentationTypeChecker:
    def __init__(self):
        self.errors: List[str] = []
        self.warnings: List[str] = []
        self.labels: Set[str] = set()
        self.generators: List[Generator] = []

    def error(self, path: str, message: str):
        self.errors.append(f"{path}: {message}")

    def warning(self, path: str, message: str):
        self.warnings.append(f"{path}: {message}")

    def check_type(self, path: str, value: Any, expected_type: type, field_name: str) -> bool:
        if not isinstance(value, expected_type) or isinstance(value, bool):
            self.error(path, f"'{field_name}' must be {expected_type.__name__}, got {type(value).__name__}")
            return False
        return True

    def check_generator(self, item: Any, index: int) -> None:
        path = f"generators[{index}]"
        if not isinstance(item, dict):
            self.error(path, "Generator must be an object")
            return
        if 'label' not in item:
            self.error(path, "Missing required field 'label'")
            return
        label = item['label']
        if not self.check_type(path, label, str, 'label'):
            return
        if not label or any(ch.isspace() for ch in label) or label[0].isdigit():
            self.error(path, f"Invalid label {label!r}")
            return
        if label in self.labels:
            self.error(path, f"Duplicate generator label '{label}'")
        weight = item.get('weight', 1)
        if self.check_type(path, weight, int, 'weight') and weight < 1:
            self.error(path, f"'weight' must be positive, got {weight}")
            weight = 1
        subset = item.get('subset', [])
        if not isinstance(subset, list) or not all(isinstance(v, int) for v in subset):
            self.error(path, "'subset' must be a list of integers")
            subset = []
        aliases = item.get('aliases', [])
        if not isinstance(aliases, list) or not all(isinstance(a, str) for a in aliases):
            self.error(path, "'aliases' must be a list of strings")
            aliases = []
        for key in item:
            if key not in ALLOWED_GENERATOR_FIELDS:
                self.warning(path, f"Unexpected field '{key}'")
        self.labels.add(label)
        self.labels.update(aliases)
        self.generators.append(Generator(len(self.generators), label,
                                         weight if isinstance(weight, int) else 1,
                                         tuple(subset), tuple(aliases)))

    def check_relations(self, relations: Any, field_name: str) -> None:
        if not isinstance(relations, list):
            self.error("relations", "Must be an array")
            return
        try:
            field = field_from_name(field_name)
        except (FieldError, KoszulLabError):
            field = QQ
        parsed = []
        for i, text in enumerate(relations):
            path = f"relations[{i}]"
            if not isinstance(text, str):
                self.error(path, "Relation must be a string")
                continue
            try:
                poly = parse_poly(text, self.generators, field)
            except KoszulLabError as e:
                self.error(path, str(e))
                continue
            if poly.is_zero():
                self.error(path, "Relation is zero")
                continue
            degrees = {len(w) for w in poly.terms}
            if degrees != {2}:
                self.error(path, f"Relation must be quadratic, found degrees {sorted(degrees)}")
                continue
            parsed.append(poly)
        if parsed and self.generators:
            ambient = GradedComponent.of(self.generators, 2)
            rank = span(parsed, ambient, field).dim
            if rank < len(parsed):
                self.warning("relations", f"{len(parsed)} relations span only a {rank}-dimensional space")

    def check_order(self, order: Any) -> None:
        if not self.check_type("order", order, str, 'order'):
            return
        separator = ">" if ">" in order else ","
        tokens = [t.strip() for t in order.split(separator) if t.strip()]
        primary = {g.label for g in self.generators}
        lookup = {alias: g.label for g in self.generators for alias in (g.label,) + g.aliases}
        resolved = []
        for token in tokens:
            if token not in lookup:
                self.error("order", f"Unknown generator '{token}'")
            else:
                resolved.append(lookup[token])
        if len(set(resolved)) != len(resolved):
            self.error("order", "A generator appears twice")
        missing = primary - set(resolved)
        if missing:
            self.error("order", f"Order omits {sorted(missing)}")

    def check_document(self, data: Any) -> Tuple[List[str], List[str]]:
        """
        Main entry point for type checking.
        Returns (errors, warnings).
        """
        if not isinstance(data, dict):
            self.error("root", "Presentation must be a JSON object")
            return self.errors, self.warnings

        if 'name' in data:
            self.check_type("root", data['name'], str, 'name')
        field_name = data.get('field', 'rational')
        if self.check_type("root", field_name, str, 'field'):
            try:
                field_from_name(field_name)
            except (FieldError, KoszulLabError) as e:
                self.error("field", str(e))
        else:
            field_name = 'rational'

        if 'generators' not in data:
            self.error("root", "Missing 'generators' array")
        elif not isinstance(data['generators'], list):
            self.error("generators", "Must be an array")
        else:
            for i, item in enumerate(data['generators']):
                self.check_generator(item, i)

        if 'relations' not in data:
            self.error("root", "Missing 'relations' array")
        elif not self.errors:
            self.check_relations(data['relations'], field_name)

        if 'flags' in data:
            flags = data['flags']
            if not isinstance(flags, list) or not all(isinstance(f, str) for f in flags):
                self.error("flags", "Must be a list of strings")

        if 'order' in data and self.generators:
            self.check_order(data['order'])

        for key in data:
            if key not in ALLOWED_TOP_LEVEL:
                self.warning("root", f"Unexpected field '{key}'")

        return self.errors, self.warnings


def typecheck_presentation(json_path: str) -> Tuple[List[str], List[str]]:
    """
    Type check a presentation JSON file.
    Returns (errors, warnings).
    """
    try:
        with open(Path(json_path), 'r') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        return [f"Invalid JSON: {e}"], []
    except FileNotFoundError:
        return [f"File not found: {json_path}"], []
    return PresentationTypeChecker().check_document(data)
