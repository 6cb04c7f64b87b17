"""
Elements of the free associative algebra k⟨V⟩.

A Poly is a finite map from words to nonzero coefficients of one field. Zero
coefficients are never stored, so equality is plain dictionary equality.
"""

from typing import Any, Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple

from .fields import Field, QQ
from .words import EMPTY_WORD, MonomialOrder, Word
from ..errors import FieldMismatchError, ZeroPolynomialError


class Poly:
    """Noncommutative polynomial with coefficients in `field`."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field = QQ, terms: Optional[Mapping[Word, Any]] = None):
        self.field = field
        clean: Dict[Word, Any] = {}
        if terms:
            for word, coeff in terms.items():
                value = field.coerce(coeff)
                if not field.is_zero(value):
                    clean[tuple(word)] = value
        self.terms = clean

    @classmethod
    def _raw(cls, field: Field, terms: Dict[Word, Any]) -> 'Poly':
        """Wrap an already-clean term dict without re-coercing."""
        poly = cls.__new__(cls)
        poly.field = field
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, field: Field = QQ) -> 'Poly':
        return cls._raw(field, {})

    @classmethod
    def monomial(cls, word: Word, coeff: Any = 1, field: Field = QQ) -> 'Poly':
        return cls(field, {tuple(word): coeff})

    @classmethod
    def one(cls, field: Field = QQ) -> 'Poly':
        return cls.monomial(EMPTY_WORD, 1, field)

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[Any, Word]], field: Field = QQ) -> 'Poly':
        """Sum of coeff·word pairs; repeated words accumulate."""
        acc: Dict[Word, Any] = {}
        for coeff, word in pairs:
            word = tuple(word)
            acc[word] = field.add(acc.get(word, field.zero()), field.coerce(coeff))
        return cls(field, acc)

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def words(self) -> Iterator[Word]:
        return iter(self.terms)

    def coefficient(self, word: Word) -> Any:
        return self.terms.get(tuple(word), self.field.zero())

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self.terms}) <= 1

    def leading_term(self, order: MonomialOrder) -> Tuple[Word, Any]:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        word = order.max_word(self.terms)
        return word, self.terms[word]

    def sorted_terms(self, order: MonomialOrder) -> list:
        """(word, coeff) pairs, largest word first."""
        return [(w, self.terms[w]) for w in order.sorted_desc(self.terms)]

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: 'Poly') -> None:
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot combine polynomials over {self.field.descriptor()} and {other.field.descriptor()}"
            )

    def __add__(self, other: 'Poly') -> 'Poly':
        self._check(other)
        f = self.field
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            value = f.add(terms.get(word, f.zero()), coeff)
            if f.is_zero(value):
                terms.pop(word, None)
            else:
                terms[word] = value
        return Poly._raw(f, terms)

    def __neg__(self) -> 'Poly':
        f = self.field
        return Poly._raw(f, {w: f.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other: 'Poly') -> 'Poly':
        return self + (-other)

    def scale(self, scalar: Any) -> 'Poly':
        f = self.field
        s = f.coerce(scalar)
        if f.is_zero(s):
            return Poly.zero(f)
        return Poly._raw(f, {w: f.mul(s, c) for w, c in self.terms.items()})

    def __mul__(self, other: Any) -> 'Poly':
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> 'Poly':
        return self.scale(other)

    def sandwich(self, left: Word = EMPTY_WORD, right: Word = EMPTY_WORD) -> 'Poly':
        """left · self · right for words left, right."""
        left, right = tuple(left), tuple(right)
        return Poly._raw(self.field, {left + w + right: c for w, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        inner = ", ".join(f"{w}: {self.field.render(c)}" for w, c in sorted(self.terms.items()))
        return f"Poly({{{inner}}})"

    # -- transformations -----------------------------------------------

    def map_coefficients(self, fn: Callable[[Any], Any], field: Field) -> 'Poly':
        """Apply fn to every coefficient and land in `field` (used for field changes)."""
        return Poly(field, {w: fn(c) for w, c in self.terms.items()})

    def over(self, field: Field) -> 'Poly':
        """Same polynomial with coefficients coerced into another field."""
        if field == self.field:
            return self
        return Poly(field, dict(self.terms))

    def substitute(self, images: Mapping[int, 'Poly']) -> 'Poly':
        """
        Replace each generator g by images[g] (an algebra map of k⟨V⟩).

        Generators missing from images are kept as they are. All images must
        live over the same field, which is also the field of the result.
        """
        if not images:
            return self
        target = next(iter(images.values())).field
        result = Poly.zero(target)
        for word, coeff in self.terms.items():
            product = Poly.monomial(EMPTY_WORD, target.coerce(coeff), target)
            for g in word:
                image = images.get(g)
                if image is None:
                    image = Poly.monomial((g,), 1, target)
                product = poly_mul(product, image)
            result = result + product
        return result


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Concatenation product; bilinear, associative, not commutative."""
    p._check(q)
    f = p.field
    acc: Dict[Word, Any] = {}
    for w1, c1 in p.terms.items():
        for w2, c2 in q.terms.items():
            word = w1 + w2
            acc[word] = f.add(acc.get(word, f.zero()), f.mul(c1, c2))
    return Poly._raw(f, {w: c for w, c in acc.items() if not f.is_zero(c)})


def leading_term(order: MonomialOrder, p: Poly) -> Tuple[Word, Any]:
    return p.leading_term(order)


def commutator(x: Poly, y: Poly) -> Poly:
    """[x, y] = xy − yx."""
    return poly_mul(x, y) - poly_mul(y, x)
