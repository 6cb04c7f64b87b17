from fractions import Fraction

import random

import pytest
import sympy

from koszul_lab.algebra.words import Generator
from koszul_lab.counting import (
    Pattern, brute_force_count, build_automaton, counts, expand_series, fit_recurrence,
    matches_expression, parse_patterns, printed_coefficients, rational_function, render_coefficients,
    render_patterns, render_rational_function, series_equal,
)
from koszul_lab.counting.series import X
from koszul_lab.errors import ParseError, RecurrenceFitError
from koszul_lab.rewrite import forbidden_patterns

K3_PATTERNS = "cef, cd, cb, ca, bf, ba"
K3_COUNTS = [1, 6, 31, 157, 793, 4004]
FIBONACCI = [1, 2, 3, 5, 8, 13, 21, 34]

XYZ = [Generator(i, label) for i, label in enumerate("xyz")]


def test_parse_patterns(gens):
    patterns = parse_patterns("cef, cd ef*b", gens)
    assert patterns == [Pattern((2, 4, 5)), Pattern((2, 3)), Pattern((4,), 5, (1,))]
    assert render_patterns(patterns, gens) == ["cef", "cd", "ef*b"]


@pytest.mark.parametrize("text", ["e**b", "*b", "ez"])
def test_parse_patterns_rejects(gens, text):
    with pytest.raises(ParseError):
        parse_patterns(text, gens)


def test_star_pattern_language():
    efb = Pattern((4,), 5, (1,))
    assert efb.is_finite is False
    assert efb.min_length == 3
    assert efb.matches((4, 5, 5, 5, 1))
    assert not efb.matches((4, 1))
    assert not efb.matches((4, 5, 3, 1))
    assert efb.occurs_in((0, 4, 5, 5, 1, 2))
    assert not efb.occurs_in((4, 5, 5, 0, 1))


def test_k3_counts(gens):
    aut = build_automaton(6, parse_patterns(K3_PATTERNS, gens))
    assert counts(aut, 5) == K3_COUNTS


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("text", ["xy*z, zz", "xx, yzy", "x*y", "xyz, y*x, zx*"])
def test_automaton_matches_brute_force(text, n):
    patterns = parse_patterns(text, XYZ)
    aut = build_automaton(3, patterns)
    assert counts(aut, n)[n] == brute_force_count(3, patterns, n)


def test_automaton_accepts(gens):
    aut = build_automaton(6, parse_patterns("ef*b", gens))
    assert aut.accepts((4, 5, 5, 0))
    assert not aut.accepts((2, 4, 5, 5, 5, 1))


def test_k3_series(gens):
    values = counts(build_automaton(6, parse_patterns(K3_PATTERNS, gens)), 11)
    fit = fit_recurrence(values, (len(values) - 2) // 2)
    assert fit.recurrence == (6, -5, 1)
    assert fit.offset == 3
    assert fit.numerator == (Fraction(1),)
    assert fit.denominator == (1, -6, 5, -1)
    assert fit.verified_through == 11
    assert sympy.simplify(rational_function(fit) - 1 / (1 - 6 * X + 5 * X ** 2 - X ** 3)) == 0
    assert expand_series(fit, 12) == values


def test_printed_series_is_a_different_function(gens):
    values = counts(build_automaton(6, parse_patterns(K3_PATTERNS, gens)), 9)
    fit = fit_recurrence(values, 3)
    assert matches_expression(fit, "1/(1 - 6*x + 5*x**2 - x**3)")
    assert not matches_expression(fit, "1/(x**3 - 6*x**2 + 5*x - 1)")
    assert printed_coefficients("1/(x**3 - 6*x**2 + 5*x - 1)", 3) == [-1, -5, -19]


def test_eventually_zero_sequence():
    fit = fit_recurrence([1, 6, 5, 1, 0, 0, 0, 0], 3)
    assert fit.order == 0
    assert fit.offset == 4
    assert fit.numerator == (1, 6, 5, 1)
    assert fit.denominator == (1,)


def test_fibonacci():
    fit = fit_recurrence(FIBONACCI, 3)
    assert fit.recurrence == (1, 1)
    assert fit.offset == 2
    assert fit.numerator == (1, 1)
    assert series_equal(fit, fit_recurrence(FIBONACCI + [55, 89], 4), 7)
    with pytest.raises(ValueError):
        series_equal(fit, fit, 8)


def test_no_recurrence_of_low_order():
    with pytest.raises(RecurrenceFitError):
        fit_recurrence(FIBONACCI, 1)


def test_too_few_terms():
    with pytest.raises(ValueError):
        fit_recurrence([1, 2, 3], 2)


def test_render_coefficients():
    assert render_coefficients([Fraction(1, 2), Fraction(3), Fraction(-4, 2)]) == ["1/2", 3, -2]


def test_render_normalizes_the_denominator(gens):
    k3 = fit_recurrence(counts(build_automaton(6, parse_patterns(K3_PATTERNS, gens)), 9), 3)
    assert render_rational_function(k3) == "1/(1 - 6*x + 5*x**2 - x**3)"
    assert render_rational_function(fit_recurrence(FIBONACCI, 3)) == "(1 + x)/(1 - x - x**2)"
    assert render_rational_function(fit_recurrence([1, 6, 5, 1, 0, 0, 0, 0], 3)) == "1 + 6*x + 5*x**2 + x**3"
    assert matches_expression(k3, render_rational_function(k3))


def random_pattern(rng):
    return "".join(rng.choice("xyz") for _ in range(rng.randint(1, 3)))


@pytest.mark.parametrize("seed", range(8))
def test_more_forbidden_words_never_increase_counts(seed):
    rng = random.Random(seed)
    smaller = [random_pattern(rng) for _ in range(2)]
    larger = smaller + [random_pattern(rng) for _ in range(2)]
    few = counts(build_automaton(3, parse_patterns(", ".join(smaller), XYZ)), 7)
    many = counts(build_automaton(3, parse_patterns(", ".join(larger), XYZ)), 7)
    assert all(m <= f for m, f in zip(many, few))


@pytest.fixture(scope="module")
def gr_counts(gr_system):
    return counts(build_automaton(6, forbidden_patterns(gr_system)), 20)


def test_gr_counts_follow_the_fitted_recurrence(gr_counts):
    fit = fit_recurrence(gr_counts[:13], 5)
    assert fit.recurrence == (6, -5, 1)
    r1, r2, r3 = fit.recurrence
    for n in range(4, 21):
        assert gr_counts[n] == r1 * gr_counts[n - 1] + r2 * gr_counts[n - 2] + r3 * gr_counts[n - 3]
    assert expand_series(fit, 21) == gr_counts


def test_k3_and_gr_series_agree(gens, gr_counts):
    k3 = fit_recurrence(counts(build_automaton(6, parse_patterns(K3_PATTERNS, gens)), 12), 5)
    gr = fit_recurrence(gr_counts[:13], 5)
    assert series_equal(k3, gr, 12)
