"""The vertex cycle and the eigenbasis it diagonalizes."""

from fractions import Fraction

import pytest

from koszul_lab.algebra import QQ, QQ_OMEGA, CycloNumber, Poly, parse_poly
from koszul_lab.errors import PresentationError
from koszul_lab.quadratic import (
    Presentation, compute_eigenbasis, eigenbasis, is_invariant, permute, vertex_cycle,
)


@pytest.fixture(scope="module")
def eigen(gr):
    return compute_eigenbasis(gr)


def test_vertex_cycle_on_k3_generators(gr):
    assert vertex_cycle(gr) == {0: 1, 1: 2, 2: 0, 3: 4, 4: 5, 5: 3}


def test_permute_moves_words(gr, poly):
    assert permute(poly("db - da"), vertex_cycle(gr)) == poly("ec - eb")


@pytest.mark.parametrize("name", ["gr", "k3"])
def test_relations_are_cycle_invariant(name, request):
    presentation = request.getfixturevalue(name)
    assert is_invariant(presentation, vertex_cycle(presentation))


def test_lopsided_relations_are_not_invariant(gens, poly):
    lopsided = Presentation(tuple(gens), (poly("db - da"),), QQ, name="lopsided")
    assert not is_invariant(lopsided, vertex_cycle(lopsided))
    with pytest.raises(PresentationError, match="not invariant"):
        compute_eigenbasis(lopsided)


def test_generators_without_subsets_are_rejected(free3):
    with pytest.raises(PresentationError):
        vertex_cycle(free3)


def test_labels_and_exponents(eigen):
    assert [g.label for g in eigen.result.generators] == ["v1", "v2", "v3", "u1", "uw", "uw2"]
    assert eigen.exponents == (0, 2, 1, 0, 2, 1)
    assert eigen.result.field is QQ_OMEGA
    assert eigen.result.name == "eigen(gr-k3)"


def test_images_recover_old_generators(eigen):
    third = CycloNumber(Fraction(1, 3), 0)
    assert eigen.images[0] == Poly(QQ_OMEGA, {(0,): third, (1,): third, (2,): third})


def test_relation_span_keeps_its_dimension(eigen):
    assert eigen.result.relation_span().dim == 5
    assert eigenbasis(eigen.source).relation_span() == eigen.result.relation_span()


@pytest.mark.parametrize("text, member", [
    ("uw2*uw2 - 2*u1*uw + uw*u1", True),
    ("uw*uw - 2*u1*uw2 + uw2*u1", True),
    ("uw2*uw2 - 2*u1*uw - uw*u1", False),
])
def test_weight_two_part(eigen, text, member):
    element = parse_poly(text, eigen.result.generators, QQ_OMEGA)
    assert eigen.result.relation_span().contains(element) is member


def test_eigenvalues(eigen):
    uw = Poly.monomial((4,), 1, QQ_OMEGA)
    assert eigen.act(uw) == Poly.monomial((4,), CycloNumber(-1, -1), QQ_OMEGA)
    balanced = Poly.monomial((4, 5), 1, QQ_OMEGA)
    assert eigen.act(balanced) == balanced


def test_transformed_relations_are_stable(eigen):
    assert eigen.is_stable()
