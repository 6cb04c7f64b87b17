"""
Quadratic presentations A = k⟨V⟩ / (R) with R ⊂ V ⊗ V.

Generators carry weights (1 for vertices, 2 for edges in the graph algebras),
so V^{⊗n} splits into slot-weight components V_{w1} ⊗ … ⊗ V_{wn}. When every
relation space R ∩ V_{w1} ⊗ V_{w2} together spans R, the presentation is
"slot-graded" and every construction can be done one component at a time.
"""

from dataclasses import dataclass, replace
from dataclasses import field as dataclass_field
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..algebra.fields import Field, QQ
from ..algebra.poly import Poly
from ..algebra.words import Generator, Word, word_weight
from ..errors import PresentationError
from ..linear.subspace import GradedComponent, Subspace, span

K3_LIKE = "k3-like"


@dataclass(frozen=True)
class Presentation:
    """Generators, quadratic relations, coefficient field."""
    generators: Tuple[Generator, ...]
    relations: Tuple[Poly, ...]
    field: Field = QQ
    name: str = "presentation"
    flags: FrozenSet[str] = dataclass_field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, 'generators', tuple(self.generators))
        object.__setattr__(self, 'relations', tuple(self.relations))
        object.__setattr__(self, 'flags', frozenset(self.flags))
        for i, g in enumerate(self.generators):
            if g.id != i:
                raise PresentationError(f"generator {g.label} has id {g.id}, expected {i}")
        labels = [g.label for g in self.generators]
        if len(set(labels)) != len(labels):
            raise PresentationError(f"duplicate generator labels in {labels}")
        size = len(self.generators)
        for k, relation in enumerate(self.relations):
            if relation.field != self.field:
                raise PresentationError(
                    f"relation {k} is over {relation.field.descriptor()}, presentation over {self.field.descriptor()}"
                )
            if relation.is_zero():
                raise PresentationError(f"relation {k} is zero")
            for word in relation.terms:
                if len(word) != 2:
                    raise PresentationError(f"relation {k} has a term of degree {len(word)}; relations must be quadratic")
                if any(not 0 <= g < size for g in word):
                    raise PresentationError(f"relation {k} uses an unknown generator in {word}")

    @property
    def size(self) -> int:
        return len(self.generators)

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(g.weight for g in self.generators)

    def distinct_weights(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.weights)))

    def component(self, degree: int, weight_vector: Optional[Sequence[int]] = None) -> GradedComponent:
        return GradedComponent.of(self.generators, degree, weight_vector)

    def relation_span(self) -> Subspace:
        """R as a subspace of V ⊗ V."""
        return span(self.relations, self.component(2), self.field)

    def canonical(self) -> 'Presentation':
        """Same R, relations replaced by the RREF basis (linearly independent)."""
        return replace(self, relations=tuple(self.relation_span().to_polys()))

    def over(self, target: Field) -> 'Presentation':
        """Coefficients coerced into another field (Q → Q(ω), Q → F_p)."""
        if target == self.field:
            return self
        return replace(self, field=target, relations=tuple(r.over(target) for r in self.relations))

    def with_name(self, name: str) -> 'Presentation':
        return replace(self, name=name)

    def slot_parts(self) -> Dict[Tuple[int, int], List[Poly]]:
        """Each relation split by the slot weights of its words."""
        pieces: Dict[Tuple[int, int], List[Poly]] = {}
        for relation in self.relations:
            split: Dict[Tuple[int, int], Dict[Word, object]] = {}
            for word, coeff in relation.terms.items():
                key = (self.generators[word[0]].weight, self.generators[word[1]].weight)
                split.setdefault(key, {})[word] = coeff
            for key, terms in split.items():
                pieces.setdefault(key, []).append(Poly(self.field, terms))
        return pieces

    def is_slot_graded(self) -> bool:
        """Does R equal the sum of its slot-weight components?"""
        relation_span = self.relation_span()
        parts = [p for polys in self.slot_parts().values() for p in polys]
        return span(parts, self.component(2), self.field) == relation_span

    def slot_components(self) -> Dict[Tuple[int, int], Subspace]:
        """R ∩ V_{w1} ⊗ V_{w2} for every weight pair (slot-graded presentations)."""
        if not self.is_slot_graded():
            raise PresentationError(f"{self.name} is not graded by slot weights")
        pieces = self.slot_parts()
        weights = self.distinct_weights()
        result = {}
        for pair in product(weights, repeat=2):
            result[pair] = span(pieces.get(pair, []), self.component(2, pair), self.field)
        return result

    def label(self, generator: int) -> str:
        return self.generators[generator].label


def chop(presentation: Presentation) -> Presentation:
    """
    Associated graded presentation: keep the terms of maximal total weight in each relation.

    The chopped relations are canonicalized, so dependent leading parts collapse.
    """
    gens = presentation.generators
    chopped = []
    for relation in presentation.relations:
        top = max(word_weight(w, gens) for w in relation.terms)
        chopped.append(Poly(presentation.field,
                            {w: c for w, c in relation.terms.items() if word_weight(w, gens) == top}))
    result = replace(presentation, relations=tuple(chopped), name=f"gr({presentation.name})")
    return result.canonical()


def same_relation_space(p: Presentation, q: Presentation) -> bool:
    """Equal R after aligning q's generators to p's by vertex subset (or label)."""
    aligned = align_generators(q, p)
    return p.relation_span() == aligned.relation_span()


def align_generators(source: Presentation, reference: Presentation) -> Presentation:
    """
    Renumber source's generators to match reference (by subset, else by label).

    Raises:
        PresentationError: the generator sets do not correspond
    """
    if source.size != reference.size:
        raise PresentationError(f"{source.name} and {reference.name} have different generator counts")

    def key(g: Generator):
        return ("subset", tuple(sorted(g.subset))) if g.subset else ("label", g.label)

    target = {key(g): g.id for g in reference.generators}
    mapping = {}
    for g in source.generators:
        if key(g) not in target:
            raise PresentationError(f"generator {g.label} of {source.name} has no counterpart in {reference.name}")
        mapping[g.id] = target[key(g)]
    relations = tuple(
        Poly(source.field, {tuple(mapping[x] for x in w): c for w, c in r.terms.items()})
        for r in source.relations
    )
    return replace(source, generators=reference.generators, relations=relations)
