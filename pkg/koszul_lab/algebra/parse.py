"""
Text syntax for polynomials.

    d*b - d*a + a*b - b*a        explicit products
    db - da + ab - ba            juxtaposed single-character labels
    u(12)*u(2) - u(2)*u(12)      labels or aliases with parentheses
    effa + 1/2 edfb - e^2f       rational coefficients, powers, unicode minus
    2x + 3/4y                   a coefficient written against a word
    (1/2+3*w)*d*e                cyclotomic coefficients over Q(ω)

Terms are separated by + and - at parenthesis depth zero. Inside a term,
factors are separated by * or whitespace; each factor is a coefficient or a
run of generator labels (matched greedily, longest label first).
"""

import re
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .fields import CyclotomicField, Field, QQ
from .poly import Poly
from .words import Generator, MonomialOrder, Word, label_index, render_word
from ..errors import ParseError

_NUMBER_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_PREFIXED_RE = re.compile(r"^(\d+(?:/\d+)?)(\D.*)$")


def _split_terms(text: str) -> List[Tuple[str, str]]:
    """Split into (sign, body) pairs at top-level + and -."""
    terms: List[Tuple[str, str]] = []
    depth = 0
    sign = "+"
    current: List[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced ')' in {text!r}")
        if depth == 0 and ch in "+-" and "".join(current).strip():
            terms.append((sign, "".join(current).strip()))
            sign, current = ch, []
            continue
        if depth == 0 and ch in "+-":
            # leading sign of the first term, or a doubled sign
            sign = "-" if (sign == "-") != (ch == "-") else "+"
            continue
        current.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced '(' in {text!r}")
    if "".join(current).strip():
        terms.append((sign, "".join(current).strip()))
    elif terms or text.strip() not in ("", "0"):
        raise ParseError(f"dangling sign in {text!r}")
    return terms


def _split_factors(term: str) -> List[str]:
    factors: List[str] = []
    depth = 0
    current: List[str] = []
    for ch in term:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and (ch == "*" or ch.isspace()):
            if current:
                factors.append("".join(current))
                current = []
            continue
        current.append(ch)
    if current:
        factors.append("".join(current))
    return factors


def _parse_letters(factor: str, labels: Dict[str, int], ordered_labels: List[str]) -> Word:
    """Greedy decomposition of a factor into labels, honouring label^k."""
    word: List[int] = []
    i = 0
    while i < len(factor):
        for label in ordered_labels:
            if factor.startswith(label, i):
                i += len(label)
                repeat = 1
                power = re.match(r"\^(\d+)", factor[i:])
                if power:
                    repeat = int(power.group(1))
                    i += len(power.group(0))
                word.extend([labels[label]] * repeat)
                break
        else:
            raise ParseError(f"unknown generator at {factor[i:]!r} in {factor!r}")
    return tuple(word)


def parse_poly(text: str, generators: Sequence[Generator], field: Field = QQ) -> Poly:
    """
    Parse a polynomial in the given generators.

    Args:
        text: Polynomial text (see module docstring)
        generators: Generators whose labels/aliases may appear
        field: Coefficient field of the result

    Returns:
        The parsed Poly
    """
    cleaned = text.replace("−", "-").replace("·", "*").strip()
    if not cleaned or cleaned == "0":
        return Poly.zero(field)
    labels = label_index(generators)
    ordered_labels = sorted(labels, key=len, reverse=True)
    pairs: List[Tuple[Any, Word]] = []
    for sign, body in _split_terms(cleaned):
        coeff = field.one()
        word: Word = ()
        for factor in _split_factors(body):
            if factor in labels:
                word = word + (labels[factor],)
            elif _NUMBER_RE.match(factor):
                coeff = field.mul(coeff, field.parse(factor))
            elif factor.startswith("(") and factor.endswith(")") and factor[1:-1] not in labels:
                coeff = field.mul(coeff, _parse_coefficient(factor, field))
            elif factor in ("w", "ω") and "w" not in labels:
                coeff = field.mul(coeff, _parse_coefficient(factor, field))
            elif _PREFIXED_RE.match(factor) and not factor.startswith(tuple(ordered_labels)):
                number, letters = _PREFIXED_RE.match(factor).groups()
                coeff = field.mul(coeff, field.parse(number))
                word = word + _parse_letters(letters, labels, ordered_labels)
            else:
                word = word + _parse_letters(factor, labels, ordered_labels)
        if sign == "-":
            coeff = field.neg(coeff)
        pairs.append((coeff, word))
    return Poly.from_terms(pairs, field)


def _parse_coefficient(text: str, field: Field) -> Any:
    if isinstance(field, CyclotomicField):
        return field.parse(text)
    inner = text.strip("()")
    if "w" in inner or "ω" in inner:
        raise ParseError(f"cyclotomic coefficient {text!r} needs the cyclotomic field")
    return field.parse(inner)


def render_poly(p: Poly, generators: Sequence[Generator],
                order: Optional[MonomialOrder] = None) -> str:
    """
    Render a polynomial, largest word first under `order` (or deg-lex by id).

    The output parses back with parse_poly() to the same Poly.
    """
    if p.is_zero():
        return "0"
    if order is not None:
        words = order.sorted_desc(p.terms)
    else:
        words = sorted(p.terms, key=lambda w: (-len(w), w))
    field = p.field
    sep = "" if all(len(g.label) == 1 for g in generators) else "*"
    parts: List[str] = []
    for word in words:
        coeff = p.terms[word]
        negative = _is_negative(coeff, field)
        if negative:
            coeff = field.neg(coeff)
        text_word = render_word(word, generators, sep) if word else ""
        if coeff == field.one():
            body = text_word or "1"
        else:
            c = field.render(coeff)
            body = f"{c}*{text_word}" if text_word else c
            if not sep and text_word and not c.startswith("("):
                body = f"{c} {text_word}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)


def _is_negative(coeff: Any, field: Field) -> bool:
    rendered = field.render(coeff)
    return rendered.startswith("-")


def parse_word(text: str, generators: Sequence[Generator]) -> Word:
    """Parse a single word such as "cef", "e^2f" or "u(12)*u(2)"."""
    labels = label_index(generators)
    ordered_labels = sorted(labels, key=len, reverse=True)
    word: Word = ()
    for factor in _split_factors(text.strip()):
        if factor in labels:
            word = word + (labels[factor],)
        elif factor == "1":
            continue
        else:
            word = word + _parse_letters(factor, labels, ordered_labels)
    return word
