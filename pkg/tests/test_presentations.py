"""Built-in presentations, source resolution and presentation documents."""

import json

import pytest

from koszul_lab.algebra import PrimeField
from koszul_lab.errors import GraphFormatError, ParseError, PresentationError
from koszul_lab.presentations import (
    GR_K3_ORDER, K3_ORDER, PresentationTypeChecker, dump_text, get_builtin, load_presentation,
    presentation_to_document, resolve_source, save_presentation, text_to_document,
    typecheck_presentation,
)
from koszul_lab.quadratic import K3_LIKE, same_relation_space


def test_builtin_aliases():
    assert get_builtin("ch-k3") is get_builtin("gr-k3")
    assert get_builtin("k3").order == K3_ORDER


def test_unknown_builtin_lists_choices():
    with pytest.raises(PresentationError, match="available: ch-k3, free3, gr-k3, k3, nonkoszul3"):
        get_builtin("k4")


def test_resolve_builtin_carries_order_and_field():
    source = resolve_source("gr-k3", PrimeField(7))
    assert source.order == GR_K3_ORDER
    assert source.presentation.field == PrimeField(7)
    assert K3_LIKE in source.presentation.flags
    order = source.monomial_order()
    assert [source.presentation.label(g) for g in order.precedence] == list("fedcba")


def test_resolve_graph_file(tmp_path, k3):
    path = tmp_path / "triangle.graph"
    path.write_text("n=3; 1-2 1-3 2-3")
    source = resolve_source(f"qn-graph:{path}")
    assert source.presentation.name == "qn-graph:triangle.graph"
    assert source.order is None
    assert same_relation_space(source.presentation, k3)


def test_resolve_bad_graph_file(tmp_path):
    path = tmp_path / "loop.graph"
    path.write_text("n=3; 2-2")
    with pytest.raises(GraphFormatError):
        resolve_source(f"qn-graph:{path}")


def test_resolve_unknown_source():
    with pytest.raises(PresentationError, match="neither a builtin"):
        resolve_source("no-such-thing")


def test_resolve_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        resolve_source(str(tmp_path / "missing.json"))


def test_text_round_trip(tmp_path, k3):
    path = save_presentation(tmp_path / "k3.pres", k3, K3_ORDER)
    text = path.read_text()
    assert text.startswith("# name: k3\n# field: rational\n# order: c>b>e>f>a>d\n")
    assert "# generators: a:1:{1} b:1:{2} c:1:{3} d:2:{1,2} e:2:{2,3} f:2:{1,3}" in text
    source = load_presentation(path)
    assert source.order == K3_ORDER
    assert [g.label for g in source.presentation.generators] == list("abcdef")
    assert source.presentation.generators[3].subset == (1, 2)
    assert same_relation_space(source.presentation, k3)


def test_text_keeps_flags(gr):
    document = text_to_document(dump_text(gr))
    assert document["flags"] == [K3_LIKE]
    assert len(document["relations"]) == 5


def test_json_round_trip(tmp_path, gr):
    path = save_presentation(tmp_path / "gr.json", gr, GR_K3_ORDER)
    data = json.loads(path.read_text())
    assert data["generators"][3] == {"label": "d", "weight": 2, "subset": [1, 2],
                                     "aliases": ["u(12)", "u(1,2)"]}
    source = load_presentation(path, PrimeField(7))
    assert source.presentation.field == PrimeField(7)
    assert source.presentation.flags == gr.flags
    assert same_relation_space(source.presentation, gr.over(PrimeField(7)))


def test_invalid_json_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"generators": [')
    with pytest.raises(ParseError):
        load_presentation(path)


def test_bad_generator_token():
    with pytest.raises(ParseError, match="bad generator entry"):
        text_to_document("# generators: a:one\nab")


def xyz_document(**overrides):
    document = {
        "name": "sample",
        "generators": [{"label": "x"}, {"label": "y"}],
        "relations": ["xy - yx"],
    }
    document.update(overrides)
    return document


def test_valid_document_has_no_findings():
    assert PresentationTypeChecker().check_document(xyz_document()) == ([], [])


@pytest.mark.parametrize("overrides, message", [
    ({"generators": [{"label": "x"}, {"label": "x"}]}, "Duplicate generator label 'x'"),
    ({"generators": [{"label": "x", "weight": 0}]}, "'weight' must be positive"),
    ({"generators": [{"weight": 1}]}, "Missing required field 'label'"),
    ({"field": "quaternion"}, "field"),
    ({"relations": ["xyx"]}, "Relation must be quadratic"),
    ({"relations": ["xz"]}, "relations[0]"),
    ({"relations": "xy"}, "Must be an array"),
    ({"order": "x>x"}, "A generator appears twice"),
    ({"order": "x"}, "Order omits ['y']"),
    ({"flags": "k3-like"}, "Must be a list of strings"),
])
def test_document_errors(overrides, message):
    errors, _ = PresentationTypeChecker().check_document(xyz_document(**overrides))
    assert any(message in e for e in errors), errors


def test_document_warnings():
    document = xyz_document(relations=["xy - yx", "yx - xy"], colour="blue")
    errors, warnings = PresentationTypeChecker().check_document(document)
    assert errors == []
    assert "relations: 2 relations span only a 1-dimensional space" in warnings
    assert "root: Unexpected field 'colour'" in warnings


def test_invalid_document_is_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(xyz_document(relations=["xyx"])))
    with pytest.raises(PresentationError, match="invalid presentation document"):
        load_presentation(path)


def test_typecheck_file(tmp_path):
    path = tmp_path / "sample.json"
    path.write_text(json.dumps(xyz_document()))
    assert typecheck_presentation(str(path)) == ([], [])
    assert typecheck_presentation(str(tmp_path / "absent.json"))[0][0].startswith("File not found")


def test_document_lists_relations(k3):
    document = presentation_to_document(k3)
    assert "order" not in document
    assert document["field"] == "rational"
    assert len(document["relations"]) == 5
