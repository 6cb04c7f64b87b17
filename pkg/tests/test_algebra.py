from fractions import Fraction
import random

import pytest

from koszul_lab.algebra import (
    QQ, QQ_OMEGA, CycloNumber, MonomialOrder, Ordering, Poly, commutator, find_factor, parse_poly,
    parse_word, poly_mul, render_poly, render_word, slot_weights, word_weight,
)
from koszul_lab.errors import FieldMismatchError, ParseError, ZeroPolynomialError
from koszul_lab.presentations.builtins import GR_K3_RELATIONS, K3_ORDER, K3_RELATIONS

A, B, C, D, E, F = range(6)


def test_deg_lex_order(gens, k3_order):
    assert k3_order.compare((C,), (B,)) == Ordering.GT
    assert k3_order.compare((A,), (D,)) == Ordering.GT
    assert k3_order.compare((D, D), (C,)) == Ordering.GT
    assert k3_order.compare((C, E, F), (C, E, F)) == Ordering.EQ
    assert k3_order.max_word([(B, A), (C, D), (A, C)]) == (C, D)
    assert k3_order.render(gens) == K3_ORDER


def test_order_is_compatible_with_concatenation(k3_order):
    u, v = (B, A), (A, F)
    assert k3_order.compare(u, v) == Ordering.GT
    assert k3_order.compare((E,) + u + (D,), (E,) + v + (D,)) == Ordering.GT


@pytest.mark.parametrize("text", ["a,b", "c>b>e>f>a>a", "c>b>e>f>a>z"])
def test_order_must_rank_every_generator_once(gens, text):
    with pytest.raises((ParseError, ValueError)):
        MonomialOrder.parse(text, gens)


def test_order_accepts_aliases(gens):
    order = MonomialOrder.parse("u(3),u(2),u(23),u(13),u(1),u(12)", gens)
    assert order.precedence == (C, B, E, F, A, D)


def test_words(gens):
    assert find_factor((C, E, F, B), (F, B)) == 2
    assert find_factor((C, E, F, B), (B, F)) == -1
    assert word_weight((C, E, F), gens) == 5
    assert slot_weights((C, E, F), gens) == (1, 2, 2)
    assert render_word((C, E, F), gens) == "cef"
    assert render_word((), gens) == "1"


def test_parse_relation(poly):
    r1 = poly("db - da + ab - ba")
    assert r1.terms == {(D, B): 1, (D, A): -1, (A, B): 1, (B, A): -1}


def test_parse_accepts_aliases_and_products(poly):
    assert poly("u(12)*u(2) - u(12)*u(1)") == poly("db - da")
    assert poly("u(1,2) u(2)") == poly("db")


def test_parse_powers_and_coefficients(poly):
    assert poly("e^2f") == Poly.monomial((E, E, F))
    p = poly("effa + 1/2 edfb − 3*ddfa")
    assert p.coefficient((E, D, F, B)) == Fraction(1, 2)
    assert p.coefficient((D, D, F, A)) == -3
    assert p.coefficient((E, F, F, A)) == 1


def test_parse_cyclotomic_coefficients(gens):
    p = parse_poly("(1+w)*ab - w ba", gens, QQ_OMEGA)
    assert p.coefficient((A, B)) == CycloNumber(1, 1)
    assert p.coefficient((B, A)) == CycloNumber(0, -1)
    with pytest.raises(ParseError):
        parse_poly("(1+w)*ab", gens, QQ)


@pytest.mark.parametrize("text", ["xy", "ab +", "(ab", "a)b"])
def test_parse_errors(poly, text):
    with pytest.raises(ParseError):
        poly(text)


def test_zero_parses(poly):
    assert poly("0").is_zero()
    assert poly("ab - ab").is_zero()


@pytest.mark.parametrize("text", K3_RELATIONS + GR_K3_RELATIONS + ("1/2 edfb - e^2f", "3/4*cef"))
def test_render_parses_back(gens, poly, k3_order, text):
    p = poly(text)
    assert poly(render_poly(p, gens)) == p
    assert poly(render_poly(p, gens, k3_order)) == p


def test_render_orders_terms(gens, poly, k3_order):
    assert render_poly(poly("db - da + ab - ba"), gens, k3_order) == "-ba + ab + db - da"


def test_poly_arithmetic(poly):
    a, b, c = poly("a"), poly("b"), poly("c")
    assert commutator(a, b) == poly("ab - ba")
    assert poly_mul(poly_mul(a, b + c), a) == poly_mul(a, poly_mul(b + c, a))
    assert (a - a).is_zero()
    assert (a + b).scale(0).is_zero()
    assert poly("ab").sandwich((C,), (D,)) == poly("cabd")
    assert 2 * a == a + a


def test_poly_substitute(poly):
    p = poly("ab - ba")
    assert p.substitute({A: poly("b")}).is_zero()
    assert p.substitute({A: poly("c + d")}) == poly("cb + db - bc - bd")


def test_leading_term(poly, k3_order):
    word, coeff = poly("db - da + ab - ba").leading_term(k3_order)
    assert word == (B, A) and coeff == -1
    with pytest.raises(ZeroPolynomialError):
        Poly.zero().leading_term(k3_order)


def test_field_mismatch(poly):
    with pytest.raises(FieldMismatchError):
        poly("a") + poly("a").over(QQ_OMEGA)


def test_parse_word(gens):
    assert parse_word("cef", gens) == (C, E, F)
    assert parse_word("e^2f", gens) == (E, E, F)
    assert parse_word("u(12)*u(2)", gens) == (D, B)


def test_parse_coefficient_against_a_word(poly):
    assert poly("2ab + 3/4cef") == poly("2 ab + 3/4 cef")
    assert poly("-2ba").coefficient((B, A)) == -2
    assert poly("2e^2f") == 2 * Poly.monomial((E, E, F))


def random_word(rng, max_length=3):
    return tuple(rng.randrange(6) for _ in range(rng.randint(0, max_length)))


def random_poly(rng, terms=3):
    return Poly.from_terms([(rng.randint(-3, 3), random_word(rng, 2)) for _ in range(terms)])


@pytest.mark.parametrize("seed", range(10))
def test_product_is_associative_with_unit(seed):
    rng = random.Random(seed)
    p, q, r = (random_poly(rng) for _ in range(3))
    assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))
    assert poly_mul(Poly.one(), p) == p == poly_mul(p, Poly.one())
    assert poly_mul(p, q + r) == poly_mul(p, q) + poly_mul(p, r)


@pytest.mark.parametrize("seed", range(10))
def test_order_is_a_strict_total_order(k3_order, gr_order, seed):
    rng = random.Random(seed)
    for order in (k3_order, gr_order):
        words = [random_word(rng) for _ in range(12)]
        for u in words:
            for v in words:
                forward, backward = order.compare(u, v), order.compare(v, u)
                assert (forward == Ordering.EQ) == (u == v)
                assert forward == Ordering(-int(backward))
        ranked = sorted(set(words), key=order.key)
        for lower, middle, upper in zip(ranked, ranked[1:], ranked[2:]):
            assert order.compare(upper, middle) == Ordering.GT
            assert order.compare(middle, lower) == Ordering.GT
            assert order.compare(upper, lower) == Ordering.GT
