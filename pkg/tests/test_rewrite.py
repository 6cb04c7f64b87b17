import random

import pytest

from koszul_lab.algebra import MonomialOrder, Poly
from koszul_lab.errors import CompletionError, ParseError, RuleNotFoundError
from koszul_lab.presentations.builtins import K3_RELATIONS, GR_K3_RELATIONS
from koszul_lab.rewrite import (
    RewriteSystem, Rule, complete, complete_relations, dump_system, family_coefficient,
    find_ambiguities, forbidden_patterns, conjecture_family, is_resolved, load_system, s_polynomial,
)
from koszul_lab.counting import render_patterns
from koszul_lab.quadratic import RelationLattice

K3_LHS = {"ba", "cb", "ca", "bf", "cd", "cef"}
GR_BASE = {"fe", "fd", "db", "ec", "fc"}

PRINTED_EFB = "efa - dfb + dfa"
ENGINE_EFFB = "effa + dffa - dffb - 1/2 edfa + 1/2 edfb + 1/2 ddfa - 1/2 ddfb"


def test_k3_initial_ambiguities(k3, k3_order, word_labels):
    initial = complete(k3, k3_order, 2)
    assert word_labels(initial, [a.overlap_word for a in initial.unresolved]) == {"cba", "cbf"}


def test_k3_completion(k3_system, word_labels):
    assert word_labels(k3_system) == K3_LHS
    assert k3_system.unresolved == []
    statuses = {word_labels(k3_system, [r.ambiguity.overlap_word]).pop(): r.status for r in k3_system.records}
    assert statuses["cba"] == "resolved"
    assert statuses["cbf"] == "new_rule"


def test_k3_relations_reduce_to_zero(k3_system, poly):
    for text in K3_RELATIONS:
        assert k3_system.reduce(poly(text)).is_zero()


def test_rules_point_downward(k3_system):
    order = k3_system.order
    for rule in k3_system:
        assert all(order.key(w) < order.key(rule.lhs) for w in rule.rhs.terms)


def test_every_ambiguity_resolves(k3_system):
    for ambiguity in find_ambiguities(k3_system):
        assert is_resolved(k3_system, ambiguity)
        assert k3_system.reduce(s_polynomial(k3_system, ambiguity)).is_zero()


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("text", ["cbaf", "cefb + dcbf", "cbfa - 2 ccef", "fcefd"])
def test_normal_form_is_strategy_independent(k3_system, poly, seed, text):
    rng = random.Random(seed)
    p = poly(text)
    assert k3_system.reduce(p, chooser=rng.choice) == k3_system.reduce(p)


def test_normal_forms_are_normal(k3_system, poly):
    reduced = k3_system.reduce(poly("cbaf + cefb"))
    assert all(k3_system.is_normal(w) for w in reduced.terms)


def test_normal_word_count_matches_hilbert_function(k3_system):
    assert [k3_system.normal_words(n) for n in range(4)] == [1, 6, 31, 157]


def test_gr_initial_ambiguities(gr, gr_order, word_labels):
    initial = complete(gr, gr_order, 2)
    assert word_labels(initial, [a.overlap_word for a in initial.unresolved]) == {"fdb", "fec"}


def test_gr_completion_grows_a_family(gr_system, word_labels):
    family = {"e" + "f" * j + "b" for j in range(1, 7)}
    assert word_labels(gr_system) == GR_BASE | family
    assert gr_system.unresolved


def test_gr_efb_and_effb_rules(gr_system, poly):
    assert gr_system.reduce(poly("efb") - poly(PRINTED_EFB)).is_zero()
    assert gr_system.reduce(poly("effb") - poly(ENGINE_EFFB)).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_family_coefficient(gr_system, n):
    assert family_coefficient(gr_system, n) == 1


def test_family_coefficient_unknown_letter(gr_system):
    with pytest.raises(ParseError):
        family_coefficient(gr_system, 1, head="z")


def test_conjectured_family(gr_system):
    families = conjecture_family(gr_system)
    assert render_patterns(families, gr_system.generators) == ["ef*b"]
    rendered = render_patterns(forbidden_patterns(gr_system), gr_system.generators)
    assert sorted(rendered) == sorted(GR_BASE | {"ef*b"})


def test_no_family_for_a_finite_basis(k3_system):
    assert conjecture_family(k3_system) == []


def test_completion_is_independent_of_relation_order(gens, gr_order, poly, word_labels):
    relations = [poly(text) for text in GR_K3_RELATIONS]
    forward, _ = complete_relations(gens, relations, gr_order, 5, relations[0].field)
    backward, _ = complete_relations(gens, relations[::-1], gr_order, 5, relations[0].field)
    assert word_labels(forward) == word_labels(backward)
    for rule in forward:
        assert backward.rule_for(rule.lhs).rhs == rule.rhs


def test_runaway_guard(k3, k3_order):
    with pytest.raises(CompletionError):
        complete(k3, k3_order, 3, max_rules=2)


def test_cap_must_be_at_least_two(k3, k3_order):
    with pytest.raises(ValueError):
        complete(k3, k3_order, 1)


def test_rule_lookup(k3_system):
    with pytest.raises(RuleNotFoundError):
        k3_system.rule_for((0, 0))


def test_dump_and_load(k3_system, poly):
    text = dump_system(k3_system)
    assert text.splitlines()[1] == "# order: c>b>e>f>a>d"
    assert "# cap: 3" in text
    loaded = load_system(text)
    assert loaded.lhs_words() == sorted(loaded.lhs_words(), key=loaded.order.key)
    assert set(loaded.lhs_words()) == set(k3_system.lhs_words())
    for rule in k3_system:
        assert loaded.rule_for(rule.lhs).rhs == rule.rhs
    assert loaded.degree_cap == 3
    assert loaded.reduce(poly("cbaf")) == k3_system.reduce(poly("cbaf"))


@pytest.mark.parametrize("text", [
    "ba -> ab\n",
    "# generators: a:1 b:1\n# order: b>a\n# field: rational\nba ab\n",
    "# generators: a:1 b:1\n# order: b>a\n# field: rational\nbz -> ab\n",
])
def test_load_rejects(text):
    with pytest.raises(ParseError):
        load_system(text)


def test_manual_system(gens):
    order = MonomialOrder.parse("b>a>c>d>e>f", gens)
    system = RewriteSystem(gens, order, rules=[Rule((1, 0), Poly.monomial((0, 1)))])
    assert system.reduce(Poly.monomial((1, 1, 0))) == Poly.monomial((0, 1, 1))
    assert system.is_normal((0, 1, 1))


@pytest.mark.parametrize("system_name, presentation_name, top", [
    ("k3_system", "k3", 3),
    ("gr_system", "gr", 4),
])
def test_rules_lie_in_the_relation_ideal(system_name, presentation_name, top, request):
    system = request.getfixturevalue(system_name)
    lattice = RelationLattice(request.getfixturevalue(presentation_name))
    checked = 0
    for rule in system:
        if rule.degree <= top:
            assert lattice.relation_span(rule.degree).contains(rule.as_poly()), rule
            checked += 1
    assert checked >= 5


def random_k3_poly(rng, degree):
    return Poly.from_terms(
        [(rng.randint(-4, 4), tuple(rng.randrange(6) for _ in range(degree))) for _ in range(4)]
    )


@pytest.mark.parametrize("seed", range(10))
def test_reduction_is_idempotent(k3_system, gr_system, seed):
    rng = random.Random(seed)
    for system in (k3_system, gr_system):
        p = random_k3_poly(rng, rng.randint(2, 5))
        reduced = system.reduce(p)
        assert system.reduce(reduced) == reduced
        assert all(system.is_normal(w) for w in reduced.terms)
