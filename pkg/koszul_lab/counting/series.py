"""
Hilbert series from coefficient lists.

fit_recurrence finds the minimal-order linear recurrence with constant
rational coefficients satisfied by the tail of a count sequence, by exact
kernel computation on the Hankel-type system, and turns it into a rational
function numerator / denominator with denominator(0) = 1. A recurrence is only
accepted when the number of equations exceeds the number of unknowns.

Rational functions are compared and rendered with sympy.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from ..algebra.fields import QQ, render_rational
from ..errors import RecurrenceFitError
from ..linear.echelon import solve

X = sympy.Symbol("x")


@dataclass(frozen=True)
class SeriesFit:
    """T_n = Σ_i recurrence[i-1]·T_{n-i} for n ≥ offset; series = numerator/denominator."""
    counts: Tuple[int, ...]
    recurrence: Tuple[Fraction, ...]
    offset: int
    numerator: Tuple[Fraction, ...]
    denominator: Tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.recurrence)

    @property
    def verified_through(self) -> int:
        return len(self.counts) - 1

    @property
    def initial(self) -> Tuple[int, ...]:
        return self.counts[:self.offset]


def fit_recurrence(counts: Sequence[int], max_order: int) -> SeriesFit:
    """
    Minimal-order recurrence for counts, with the smallest offset for that order.

    Args:
        counts: T_0, T_1, ... (at least 2·max_order + 2 terms)
        max_order: Largest recurrence order to try

    Returns:
        SeriesFit verified against every given term

    Raises:
        ValueError: too few terms
        RecurrenceFitError: no recurrence of order ≤ max_order fits
    """
    terms = [Fraction(t) for t in counts]
    total = len(terms)
    if total < 2 * max_order + 2:
        raise ValueError(f"need at least {2 * max_order + 2} terms to fit order {max_order}, got {total}")

    for order in range(max_order + 1):
        # at least order + 2 equations: one more than a square system, plus one
        for offset in range(order, total - order - 1):
            equations = []
            for n in range(offset, total):
                row = {i - 1: terms[n - i] for i in range(1, order + 1) if terms[n - i] != 0}
                if terms[n] != 0:
                    row[order] = terms[n]
                equations.append(row)
            solution = solve(QQ, equations, order)
            if solution is None:
                continue
            coeffs = tuple(Fraction(c) for c in solution)
            return SeriesFit(
                counts=tuple(int(t) for t in counts),
                recurrence=coeffs,
                offset=offset,
                numerator=_numerator(terms, coeffs, offset),
                denominator=(Fraction(1),) + tuple(-c for c in coeffs),
            )
    raise RecurrenceFitError(f"no linear recurrence of order ≤ {max_order} fits {len(counts)} terms")


def _numerator(terms: List[Fraction], coeffs: Tuple[Fraction, ...], offset: int) -> Tuple[Fraction, ...]:
    """First `offset` coefficients of denominator·series (higher ones vanish)."""
    numerator = []
    for k in range(offset):
        value = terms[k] - sum(c * terms[k - i] for i, c in enumerate(coeffs, start=1) if k - i >= 0)
        numerator.append(value)
    while len(numerator) > 1 and numerator[-1] == 0:
        numerator.pop()
    return tuple(numerator) if numerator else (Fraction(0),)


def expand_series(fit: SeriesFit, n_terms: int) -> List[Fraction]:
    """Power-series coefficients of numerator/denominator."""
    num, den = fit.numerator, fit.denominator
    out: List[Fraction] = []
    for n in range(n_terms):
        value = num[n] if n < len(num) else Fraction(0)
        for i in range(1, min(n, len(den) - 1) + 1):
            value -= den[i] * out[n - i]
        out.append(value / den[0])
    return out


def _poly_expr(coeffs: Sequence[Fraction]):
    return sum(sympy.Rational(c.numerator, c.denominator) * X ** k for k, c in enumerate(coeffs))


def rational_function(fit: SeriesFit):
    """The series as a sympy rational function in x, in lowest terms."""
    return sympy.cancel(_poly_expr(fit.numerator) / _poly_expr(fit.denominator))


def render_rational_function(fit: SeriesFit) -> str:
    """Lowest terms, denominator scaled to constant term 1, ascending powers: 1/(1 - 6*x + 5*x**2 - x**3)."""
    num, den = (sympy.Poly(part, X) for part in sympy.fraction(rational_function(fit)))
    scale = den.eval(0)
    num_text = _render_ascending(_ascending(num, scale))
    den_coeffs = _ascending(den, scale)
    if den_coeffs == [1]:
        return num_text
    if len([c for c in _ascending(num, scale) if c]) > 1:
        num_text = f"({num_text})"
    return f"{num_text}/({_render_ascending(den_coeffs)})"


def _ascending(p: sympy.Poly, scale) -> List[Fraction]:
    values = [sympy.Rational(c) / scale for c in reversed(p.all_coeffs())]
    return [Fraction(int(v.p), int(v.q)) for v in values]


def _render_ascending(coeffs: Sequence[Fraction]) -> str:
    parts: List[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        power = "" if k == 0 else ("x" if k == 1 else f"x**{k}")
        magnitude = abs(c)
        if not power:
            body = render_rational(magnitude)
        elif magnitude == 1:
            body = power
        else:
            body = f"{render_rational(magnitude)}*{power}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


def series_equal(f1: SeriesFit, f2: SeriesFit, horizon: int) -> bool:
    """
    Same coefficients through `horizon` and the same rational function.

    Raises:
        ValueError: either fit is verified only below horizon
    """
    if f1.verified_through < horizon or f2.verified_through < horizon:
        raise ValueError(
            f"horizon {horizon} exceeds verified range "
            f"({f1.verified_through}, {f2.verified_through})"
        )
    if expand_series(f1, horizon + 1) != expand_series(f2, horizon + 1):
        return False
    return sympy.simplify(rational_function(f1) - rational_function(f2)) == 0


def matches_expression(fit: SeriesFit, expression: str) -> bool:
    """Does a printed formula in x (e.g. "1/(x**3 - 6*x**2 + 5*x - 1)") equal the fitted series?"""
    printed = sympy.sympify(expression, locals={"x": X})
    return sympy.simplify(printed - rational_function(fit)) == 0


def printed_coefficients(expression: str, n_terms: int) -> List[Fraction]:
    """Power-series coefficients of a printed formula in x."""
    printed = sympy.sympify(expression, locals={"x": X})
    series = sympy.series(printed, X, 0, n_terms).removeO()
    return [Fraction(str(series.coeff(X, k))) for k in range(n_terms)]


def render_coefficients(values: Sequence[Fraction]) -> List:
    """Integers stay integers; other rationals become "p/q" strings."""
    return [int(v) if Fraction(v).denominator == 1 else render_rational(Fraction(v)) for v in values]
