"""
Subspaces of graded components of the tensor algebra.

A GradedComponent is the span of all words of one degree, optionally restricted
to a per-position weight vector (V_{w1} ⊗ … ⊗ V_{wn}). Its basis words are
numbered lexicographically by generator id, first position most significant,
so prefixing or suffixing a fixed word maps a component's RREF to an RREF.

A Subspace stores the canonical reduced row echelon basis (pivot = smallest
column, pivot entry 1). Two subspaces are equal exactly when their ambient,
field and RREF rows agree.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..algebra.fields import Field, QQ, render_rational
from ..algebra.poly import Poly
from ..algebra.words import Generator, Word
from ..errors import AmbientMismatchError, FieldMismatchError
from .echelon import EchelonForm, Vector


@dataclass(frozen=True)
class GradedComponent:
    """Span of the words of `degree` letters (optionally with fixed slot weights)."""
    weights: Tuple[int, ...]  # weight of each generator, indexed by id
    degree: int
    weight_vector: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.weight_vector is not None and len(self.weight_vector) != self.degree:
            raise AmbientMismatchError(
                f"weight vector {self.weight_vector} does not have length {self.degree}"
            )

    @classmethod
    def of(cls, generators: Sequence[Generator], degree: int,
           weight_vector: Optional[Sequence[int]] = None) -> 'GradedComponent':
        return cls(tuple(g.weight for g in generators), degree,
                   tuple(weight_vector) if weight_vector is not None else None)

    @cached_property
    def slots(self) -> Tuple[Tuple[int, ...], ...]:
        """Allowed letters at each position, ascending."""
        every = tuple(range(len(self.weights)))
        if self.weight_vector is None:
            return (every,) * self.degree
        return tuple(tuple(g for g in every if self.weights[g] == w) for w in self.weight_vector)

    @cached_property
    def _positions(self) -> Tuple[Dict[int, int], ...]:
        return tuple({g: i for i, g in enumerate(slot)} for slot in self.slots)

    @cached_property
    def _strides(self) -> Tuple[int, ...]:
        strides = []
        acc = 1
        for slot in reversed(self.slots):
            strides.append(acc)
            acc *= len(slot)
        return tuple(reversed(strides))

    @property
    def dimension(self) -> int:
        size = 1
        for slot in self.slots:
            size *= len(slot)
        return size

    def index(self, word: Word) -> int:
        if len(word) != self.degree:
            raise AmbientMismatchError(f"word {word} does not have degree {self.degree}")
        idx = 0
        for pos, (letter, stride) in enumerate(zip(word, self._strides)):
            try:
                idx += self._positions[pos][letter] * stride
            except KeyError:
                raise AmbientMismatchError(
                    f"word {word} is not in the weight component {self.weight_vector}"
                ) from None
        return idx

    def word_at(self, index: int) -> Word:
        letters = []
        for slot, stride in zip(self.slots, self._strides):
            q, index = divmod(index, stride)
            letters.append(slot[q])
        return tuple(letters)

    def words(self) -> Iterator[Word]:
        return product(*self.slots)

    def contains_word(self, word: Word) -> bool:
        if len(word) != self.degree:
            return False
        return all(letter in self._positions[i] for i, letter in enumerate(word))

    def concat(self, other: 'GradedComponent') -> 'GradedComponent':
        if other.weights != self.weights:
            raise AmbientMismatchError("components over different alphabets")
        if (self.weight_vector is None) != (other.weight_vector is None):
            raise AmbientMismatchError("cannot concatenate weighted and unweighted components")
        vector = None if self.weight_vector is None else self.weight_vector + other.weight_vector
        return GradedComponent(self.weights, self.degree + other.degree, vector)

    def sub(self, start: int, stop: int) -> 'GradedComponent':
        """Component of positions start..stop-1."""
        vector = None if self.weight_vector is None else self.weight_vector[start:stop]
        return GradedComponent(self.weights, stop - start, vector)

    def vector(self, p: Poly) -> Vector:
        return {self.index(w): c for w, c in p.terms.items()}

    def poly(self, vector: Vector, field: Field) -> Poly:
        return Poly(field, {self.word_at(c): v for c, v in vector.items()})

    def describe(self) -> str:
        vector = "any" if self.weight_vector is None else ",".join(map(str, self.weight_vector))
        return f"degree={self.degree} weights={vector} alphabet={len(self.weights)} dim={self.dimension}"


class Subspace:
    """Subspace of a GradedComponent, stored as its canonical RREF basis."""

    __slots__ = ("ambient", "field", "rows")

    def __init__(self, ambient: GradedComponent, field: Field, rows: Sequence[Vector]):
        self.ambient = ambient
        self.field = field
        self.rows: Tuple[Vector, ...] = tuple(rows)

    @classmethod
    def zero(cls, ambient: GradedComponent, field: Field = QQ) -> 'Subspace':
        return cls(ambient, field, ())

    @classmethod
    def full(cls, ambient: GradedComponent, field: Field = QQ) -> 'Subspace':
        one = field.one()
        return cls(ambient, field, [{i: one} for i in range(ambient.dimension)])

    @classmethod
    def from_echelon(cls, ambient: GradedComponent, form: EchelonForm) -> 'Subspace':
        return cls(ambient, form.field, form.finalize())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def pivots(self) -> Tuple[int, ...]:
        return tuple(min(row) for row in self.rows)

    def echelon(self) -> EchelonForm:
        return EchelonForm.from_rref(self.field, self.rows)

    def key(self) -> Tuple:
        return (self.ambient, self.field,
                tuple(tuple(sorted(row.items())) for row in self.rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, {self.ambient.describe()})"

    def contains(self, item: Union[Poly, Vector]) -> bool:
        vector = self.ambient.vector(item) if isinstance(item, Poly) else item
        return self.echelon().contains(vector)

    def to_polys(self) -> List[Poly]:
        return [self.ambient.poly(row, self.field) for row in self.rows]

    def extended(self, vectors: Iterable[Vector]) -> 'Subspace':
        """Span of this subspace and extra vectors (in the same ambient)."""
        form = self.echelon()
        form.extend(vectors)
        return Subspace.from_echelon(self.ambient, form)

    def tensor_left(self, left: GradedComponent) -> 'Subspace':
        """left ⊗ self inside left·ambient; stays in RREF."""
        ambient = left.concat(self.ambient)
        width = self.ambient.dimension
        rows = [{i * width + c: v for c, v in row.items()}
                for i in range(left.dimension) for row in self.rows]
        return Subspace(ambient, self.field, rows)

    def tensor_right(self, right: GradedComponent) -> 'Subspace':
        """self ⊗ right inside ambient·right; stays in RREF."""
        ambient = self.ambient.concat(right)
        width = right.dimension
        rows = [{c * width + j: v for c, v in row.items()}
                for row in self.rows for j in range(width)]
        return Subspace(ambient, self.field, rows)

    def dump(self, generators: Optional[Sequence[Generator]] = None) -> str:
        """Text form: ambient descriptor, then one RREF row per line as `col:value` pairs."""
        lines = [f"# subspace {self.ambient.describe()} field={self.field.descriptor()} rank={self.dim}"]
        for row in self.rows:
            cells = []
            for col in sorted(row):
                value = row[col]
                rendered = render_rational(value) if self.field == QQ else self.field.render(value)
                if generators is not None:
                    label = "".join(generators[g].label for g in self.ambient.word_at(col))
                    cells.append(f"{label}:{rendered}")
                else:
                    cells.append(f"{col}:{rendered}")
            lines.append(" ".join(cells))
        return "\n".join(lines) + "\n"


def _check_pair(s: Subspace, t: Subspace) -> None:
    if s.ambient != t.ambient:
        raise AmbientMismatchError(f"{s.ambient.describe()} vs {t.ambient.describe()}")
    if s.field != t.field:
        raise FieldMismatchError(f"{s.field.descriptor()} vs {t.field.descriptor()}")


def span(vectors: Iterable[Union[Poly, Vector]], ambient: GradedComponent,
         field: Field = QQ) -> Subspace:
    """Canonical span of polynomials (or raw vectors) inside ambient."""
    form = EchelonForm(field)
    for item in vectors:
        if isinstance(item, Poly):
            if item.field != field:
                raise FieldMismatchError(f"{item.field.descriptor()} vs {field.descriptor()}")
            item = ambient.vector(item)
        form.insert(item)
    return Subspace.from_echelon(ambient, form)


def subspace_sum(*spaces: Subspace) -> Subspace:
    first = spaces[0]
    form = first.echelon()
    for other in spaces[1:]:
        _check_pair(first, other)
        form.extend(other.rows)
    return Subspace.from_echelon(first.ambient, form)


def intersect(s: Subspace, t: Subspace) -> Subspace:
    """
    S ∩ T by Zassenhaus elimination.

    Rows (s | s) for S and (t | 0) for T are reduced with the left block
    first; the rows whose left block vanishes carry a basis of S ∩ T in their
    right block.
    """
    _check_pair(s, t)
    if s.is_zero() or t.is_zero():
        return Subspace.zero(s.ambient, s.field)
    if s.dim > t.dim:
        s, t = t, s
    width = s.ambient.dimension
    form = EchelonForm(s.field)
    for row in t.rows:
        form.insert(dict(row))
    for row in s.rows:
        doubled = dict(row)
        doubled.update({width + c: v for c, v in row.items()})
        form.insert(doubled)
    meet = EchelonForm(s.field)
    for pivot, row in form.rows.items():
        if pivot >= width:
            meet.insert({c - width: v for c, v in row.items()})
    return Subspace.from_echelon(s.ambient, meet)


def intersect_all(spaces: Sequence[Subspace]) -> Subspace:
    result = spaces[0]
    for other in spaces[1:]:
        result = intersect(result, other)
    return result


def contains(s: Subspace, v: Union[Poly, Vector]) -> bool:
    return s.contains(v)


def is_subspace(s: Subspace, t: Subspace) -> bool:
    """S ⊆ T."""
    _check_pair(s, t)
    form = t.echelon()
    return all(form.contains(row) for row in s.rows)


def express_in_span(target: Poly, spanning: Sequence[Poly],
                    ambient: GradedComponent) -> Optional[List[Any]]:
    """
    Coefficients c with target = Σ c_i · spanning[i], or None if target is outside the span.

    When the spanning list is dependent, one particular solution is returned.
    """
    field = target.field
    width = ambient.dimension
    form = EchelonForm(field)
    one = field.one()
    for i, p in enumerate(spanning):
        vector = ambient.vector(p)
        vector[width + i] = one
        form.insert(vector)
    residual = form.reduce(ambient.vector(target))
    if any(c < width for c in residual):
        return None
    return [field.neg(residual.get(width + i, field.zero())) for i in range(len(spanning))]
