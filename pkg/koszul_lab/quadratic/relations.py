"""
The relation subspaces V^i ⊗ R ⊗ V^j of a quadratic presentation.

RelationLattice builds and caches, per degree and slot-weight vector:

  W_n = Σ_i V^i R V^{n-2-i}      (relations of A in degree n, dim A_n = dim V^n - dim W_n)
  D_n = ⋂_i V^i R V^{n-2-i}      (the quadratic dual's orthogonal, dim A^!_n = dim D_n)

W_n is grown recursively as V ⊗ W_{n-1} + R ⊗ V^{n-2}, and D_n as
(D_{n-1} ⊗ V) ∩ (V ⊗ D_{n-1}), so a run up to degree n reuses every smaller
degree. A weight vector of None means the unrestricted component.
"""

from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import PresentationError
from ..linear.echelon import EchelonForm
from ..linear.subspace import GradedComponent, Subspace, intersect
from ..utils.logger import emit
from .presentation import Presentation

Weight = Optional[Tuple[int, ...]]


def _slice(weight: Weight, start: int, stop: int) -> Weight:
    return None if weight is None else weight[start:stop]


class RelationLattice:
    """Cached relation pieces of one presentation."""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self.field = presentation.field
        self.graded = presentation.is_slot_graded()
        self._slot_relations: Optional[Dict[Tuple[int, int], Subspace]] = None
        self._relations: Optional[Subspace] = None
        self._spans: Dict[Tuple[int, Weight], Subspace] = {}
        self._duals: Dict[Tuple[int, Weight], Subspace] = {}

    def _check(self, weight: Weight) -> None:
        if weight is not None and not self.graded:
            raise PresentationError(
                f"{self.presentation.name} is not graded by slot weights; use the unrestricted component"
            )

    def weight_vectors(self, degree: int) -> List[Weight]:
        """Every slot-weight vector of a degree, or [None] for presentations without slot grading."""
        if not self.graded:
            return [None]
        return list(product(self.presentation.distinct_weights(), repeat=degree))

    def component(self, degree: int, weight: Weight = None) -> GradedComponent:
        return self.presentation.component(degree, weight)

    def relations(self, weight: Weight = None) -> Subspace:
        """R, or R ∩ V_{w1} ⊗ V_{w2}."""
        self._check(weight)
        if weight is None:
            if self._relations is None:
                self._relations = self.presentation.relation_span()
            return self._relations
        if self._slot_relations is None:
            self._slot_relations = self.presentation.slot_components()
        return self._slot_relations[tuple(weight)]

    def piece(self, i: int, n: int, weight: Weight = None) -> Subspace:
        """V^i ⊗ R ⊗ V^{n-2-i}."""
        if not 0 <= i <= n - 2:
            raise ValueError(f"no relation piece at position {i} in degree {n}")
        result = self.relations(_slice(weight, i, i + 2))
        if i > 0:
            result = result.tensor_left(self.component(i, _slice(weight, 0, i)))
        if n - i - 2 > 0:
            result = result.tensor_right(self.component(n - i - 2, _slice(weight, i + 2, n)))
        return result

    def relation_span(self, n: int, weight: Weight = None) -> Subspace:
        """W_n = Σ_i V^i R V^{n-2-i}."""
        self._check(weight)
        key = (n, weight)
        if key in self._spans:
            return self._spans[key]
        if n < 2:
            result = Subspace.zero(self.component(n, weight), self.field)
        elif n == 2:
            result = self.relations(weight)
        else:
            shifted = self.relation_span(n - 1, _slice(weight, 1, n)).tensor_left(
                self.component(1, _slice(weight, 0, 1)))
            result = shifted.extended(self.piece(0, n, weight).rows)
        self._spans[key] = result
        return result

    def suffix_span(self, a: int, n: int, weight: Weight = None) -> Subspace:
        """Σ_{i ≥ a} V^i R V^{n-2-i} = V^a ⊗ W_{n-a}."""
        if n - a < 2:
            return Subspace.zero(self.component(n, weight), self.field)
        tail = self.relation_span(n - a, _slice(weight, a, n))
        if a == 0:
            return tail
        return tail.tensor_left(self.component(a, _slice(weight, 0, a)))

    def relation_rank(self, n: int, weight: Weight = None) -> int:
        """
        dim W_n without reducing the top degree to RREF.

        The last step only needs a rank, which skips the back-substitution
        that dominates large degrees.
        """
        self._check(weight)
        if (n, weight) in self._spans:
            return self._spans[(n, weight)].dim
        if n < 2:
            return 0
        if n == 2:
            return self.relations(weight).dim
        shifted = self.relation_span(n - 1, _slice(weight, 1, n)).tensor_left(
            self.component(1, _slice(weight, 0, 1)))
        form = EchelonForm.from_rref(self.field, shifted.rows)
        form.extend(self.piece(0, n, weight).rows)
        return form.rank

    def dual_space(self, n: int, weight: Weight = None) -> Subspace:
        """D_n = ⋂_i V^i R V^{n-2-i}; D_0 and D_1 are the whole component."""
        self._check(weight)
        key = (n, weight)
        if key in self._duals:
            return self._duals[key]
        if n < 2:
            result = Subspace.full(self.component(n, weight), self.field)
        elif n == 2:
            result = self.relations(weight)
        else:
            left = self.dual_space(n - 1, _slice(weight, 0, n - 1)).tensor_right(
                self.component(1, _slice(weight, n - 1, n)))
            right = self.dual_space(n - 1, _slice(weight, 1, n)).tensor_left(
                self.component(1, _slice(weight, 0, 1)))
            result = intersect(left, right)
        self._duals[key] = result
        return result

    def prefix_dual(self, a: int, n: int, weight: Weight = None) -> Subspace:
        """⋂_{i ≤ a-2} V^i R V^{n-2-i} = D_a ⊗ V^{n-a}."""
        head = self.dual_space(a, _slice(weight, 0, a))
        if a == n:
            return head
        return head.tensor_right(self.component(n - a, _slice(weight, a, n)))


def graded_dim(presentation: Presentation, n: int, lattice: Optional[RelationLattice] = None) -> int:
    """dim A_n, summed over slot-weight components when the presentation allows it."""
    lattice = lattice or RelationLattice(presentation)
    total = 0
    for weight in lattice.weight_vectors(n):
        total += lattice.component(n, weight).dimension - lattice.relation_rank(n, weight)
    return total


def graded_dims(presentation: Presentation, n_max: int,
                lattice: Optional[RelationLattice] = None) -> List[int]:
    """dim A_0 … dim A_{n_max}."""
    lattice = lattice or RelationLattice(presentation)
    dims = []
    for n in range(n_max + 1):
        dims.append(graded_dim(presentation, n, lattice))
        emit("LINALG", f"{presentation.name}: dim A_{n} = {dims[-1]}")
    return dims


def relation_dim(presentation: Presentation, n: int, lattice: Optional[RelationLattice] = None) -> int:
    """dim W_n."""
    lattice = lattice or RelationLattice(presentation)
    return sum(lattice.relation_rank(n, w) for w in lattice.weight_vectors(n))


def relation_subspace(presentation: Presentation, n: int, weight: Sequence[int] = None) -> Subspace:
    """W_n (or one of its slot-weight components) as a Subspace."""
    return RelationLattice(presentation).relation_span(n, tuple(weight) if weight is not None else None)
