import pytest

from koszul_lab.algebra import QQ, QQ_OMEGA, PrimeField, Poly, parse_poly
from koszul_lab.errors import PresentationError
from koszul_lab.quadratic import (
    Presentation, RelationLattice, chop, dual_dims, duality_convolution, convolution_vanishes,
    graded_dim, graded_dims, quadratic_dual, relation_dim, relation_subspace, same_relation_space,
)

K3_DIMS = [1, 6, 31, 157, 793]


def test_presentation_validation(gens):
    with pytest.raises(PresentationError):
        Presentation(tuple(gens), (parse_poly("abc", gens),))
    with pytest.raises(PresentationError):
        Presentation(tuple(gens), (Poly.zero(),))
    with pytest.raises(PresentationError):
        Presentation(tuple(gens), (parse_poly("ab", gens, QQ_OMEGA),))
    with pytest.raises(PresentationError):
        Presentation(tuple(gens[:2]) + (gens[0],), ())


def test_canonical_keeps_the_relation_space(k3):
    canonical = k3.canonical()
    assert len(canonical.relations) == 5
    assert canonical.relation_span() == k3.relation_span()
    assert canonical.canonical() == canonical


def test_chop(k3, gr):
    chopped = chop(k3)
    assert chopped.name == "gr(k3)"
    assert chopped.relation_span() == gr.relation_span()


@pytest.mark.parametrize("name", ["k3", "gr", "free3", "nonkoszul3"])
def test_chop_is_idempotent(name, request):
    once = chop(request.getfixturevalue(name))
    twice = chop(once)
    assert twice.relations == once.relations
    assert twice.relation_span() == once.relation_span()


def test_presentation_defaults(gens, poly):
    plain = Presentation(tuple(gens), (poly("ab - ba"),))
    assert plain.field == QQ
    assert plain.flags == frozenset()
    assert plain.name == "presentation"


def test_slot_grading(k3, gr, free3):
    assert gr.is_slot_graded()
    assert free3.is_slot_graded()
    assert not k3.is_slot_graded()
    components = gr.slot_components()
    assert {pair: s.dim for pair, s in components.items()} == {(1, 1): 0, (1, 2): 0, (2, 1): 3, (2, 2): 2}
    with pytest.raises(PresentationError):
        k3.slot_components()


def test_graph_and_builtin_agree(k3):
    from koszul_lab.presentations import Graph, qn_graph_presentation
    assert same_relation_space(k3, qn_graph_presentation(Graph.complete(3)))


def test_gr_dims(gr):
    assert graded_dims(gr, 4) == K3_DIMS
    assert graded_dim(gr, 2) == 31


def test_k3_dims(k3):
    lattice = RelationLattice(k3)
    assert lattice.weight_vectors(3) == [None]
    assert graded_dims(k3, 3, lattice) == K3_DIMS[:4]


def test_dims_agree_over_a_prime_field(gr):
    modular = gr.over(PrimeField(2147483647))
    assert graded_dims(modular, 4) == K3_DIMS


def test_gr_dual_dims(gr):
    assert dual_dims(gr, 5) == [1, 6, 5, 1, 0, 0]


def test_duality_convolution():
    assert duality_convolution(K3_DIMS, [1, 6, 5, 1, 0]) == [1, 0, 0, 0, 0]
    assert convolution_vanishes([1, 0, 0])
    assert not convolution_vanishes([1, 0, 2])
    assert not convolution_vanishes([])


def test_nonkoszul3(nonkoszul3):
    lattice = RelationLattice(nonkoszul3)
    primal = graded_dims(nonkoszul3, 4, lattice)
    dual = dual_dims(nonkoszul3, 4, lattice)
    assert primal == [1, 3, 7, 15, 33]
    assert dual == [1, 3, 2, 0, 0]
    assert duality_convolution(primal, dual) == [1, 0, 0, 0, 2]


def test_free3(free3):
    assert graded_dims(free3, 3) == [1, 3, 9, 27]
    assert dual_dims(free3, 3) == [1, 3, 0, 0]


def test_rank_fast_path_matches_subspace(gr):
    lattice = RelationLattice(gr)
    for weight in lattice.weight_vectors(4):
        rank = lattice.relation_rank(4, weight)
        assert rank == RelationLattice(gr).relation_span(4, weight).dim
    assert relation_dim(gr, 3) == 216 - 157


def test_relation_span_contains_every_piece(gr):
    lattice = RelationLattice(gr)
    weight = (2, 2, 1, 1)
    total = lattice.relation_span(4, weight)
    for i in range(3):
        piece = lattice.piece(i, 4, weight)
        assert all(total.contains(row) for row in piece.rows)
    assert lattice.suffix_span(0, 4, weight) == total


def test_dual_is_intersection_of_pieces(gr):
    lattice = RelationLattice(gr)
    weight = (2, 2, 1)
    dual = lattice.dual_space(3, weight)
    assert dual.dim == 1
    for i in range(2):
        piece = lattice.piece(i, 3, weight)
        assert all(piece.contains(row) for row in dual.rows)
    assert lattice.prefix_dual(3, 3, weight) == dual


def test_lattice_rejects_bad_input(k3, gr):
    with pytest.raises(PresentationError):
        RelationLattice(k3).relation_span(3, (1, 1, 1))
    with pytest.raises(ValueError):
        RelationLattice(gr).piece(3, 4)


def test_relation_subspace(gr):
    assert relation_subspace(gr, 2).dim == 5
    assert relation_subspace(gr, 3).dim == 216 - 157
    weighted = relation_subspace(gr, 3, (2, 2, 1))
    assert weighted.dim == 27 - graded_dim_of(gr, (2, 2, 1))


def graded_dim_of(presentation, weight):
    lattice = RelationLattice(presentation)
    return lattice.component(len(weight), weight).dimension - lattice.relation_rank(len(weight), weight)


@pytest.mark.parametrize("name, relation_count", [("gr", 31), ("k3", 31), ("free3", 9), ("nonkoszul3", 7)])
def test_quadratic_dual_is_the_annihilator(name, relation_count, request):
    presentation = request.getfixturevalue(name)
    dual = quadratic_dual(presentation)
    assert len(dual.result.relations) == relation_count
    assert dual.annihilates()
    assert dual.result.name == f"dual({presentation.name})"


def test_dual_of_dual_recovers_relations(gr):
    twice = quadratic_dual(quadratic_dual(gr).result).result
    assert twice.relation_span() == gr.relation_span()


@pytest.mark.parametrize("name, top", [("gr", 3), ("free3", 3), ("nonkoszul3", 4)])
def test_dual_presentation_dims_match_intersections(name, top, request):
    presentation = request.getfixturevalue(name)
    dual = quadratic_dual(presentation)
    assert graded_dims(dual.result, top) == dual.dims(top)


def test_pairing_of_pure_tensors(gr, poly):
    dual = quadratic_dual(gr)
    assert dual.pairing(poly("db + 2*ab"), poly("3*db - ab")) == 1


@pytest.mark.parametrize("system_name, presentation_name", [("k3_system", "k3"), ("gr_system", "gr")])
def test_normal_words_count_the_quotient(system_name, presentation_name, request):
    system = request.getfixturevalue(system_name)
    lattice = RelationLattice(request.getfixturevalue(presentation_name))
    for n in range(2, 5):
        assert system.normal_words(n) == 6 ** n - relation_dim(lattice.presentation, n, lattice)
