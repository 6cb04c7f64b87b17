"""
Quadratic duals: the annihilator presentation, its dimensions, and the
Hilbert series convolution test.

The pairing of V* ⊗ V* with V ⊗ V is the one on pure tensors,
⟨x_i* x_j*, x_k x_l⟩ = δ_ik δ_jl, and dual generators keep the labels of
the generators they are dual to.
"""

from dataclasses import dataclass, replace
from typing import Any, List, Optional, Sequence

from ..algebra.poly import Poly
from ..linear.subspace import Subspace, span
from ..utils.logger import emit
from .presentation import Presentation
from .relations import RelationLattice


@dataclass(frozen=True)
class DualPresentation:
    """A presentation together with the presentation of its quadratic dual."""
    source: Presentation
    result: Presentation  # relations: an RREF basis of R^⊥

    def pairing(self, dual: Poly, primal: Poly) -> Any:
        f = self.source.field
        total = f.zero()
        for word, coeff in dual.terms.items():
            if word in primal.terms:
                total = f.add(total, f.mul(coeff, primal.terms[word]))
        return total

    def annihilates(self) -> bool:
        """Every dual relation pairs to zero with every primal relation."""
        f = self.source.field
        return all(f.is_zero(self.pairing(d, r))
                   for d in self.result.relations for r in self.source.relations)

    def dims(self, n_max: int, lattice: Optional[RelationLattice] = None) -> List[int]:
        return dual_dims(self.source, n_max, lattice)


def annihilator(relations: Subspace) -> Subspace:
    """
    R^⊥ read off the RREF of R: one vector per free column c,
    e_c − Σ_rows row[c]·e_pivot(row).
    """
    f = relations.field
    pivots = {min(row): row for row in relations.rows}
    rows = []
    for c in range(relations.ambient.dimension):
        if c in pivots:
            continue
        vector = {c: f.one()}
        for pivot, row in pivots.items():
            if c in row:
                vector[pivot] = f.neg(row[c])
        rows.append(vector)
    return span(rows, relations.ambient, f)


def quadratic_dual(presentation: Presentation) -> DualPresentation:
    """The dual presentation, with dim R + dim R^⊥ = (dim V)²."""
    orthogonal = annihilator(presentation.relation_span())
    emit("LINALG", f"{presentation.name}: dim R^⊥ = {orthogonal.dim}")
    result = replace(presentation, relations=tuple(orthogonal.to_polys()),
                     name=f"dual({presentation.name})", flags=frozenset())
    return DualPresentation(presentation, result)


def dual_dims(presentation: Presentation, n_max: int,
              lattice: Optional[RelationLattice] = None) -> List[int]:
    """dim A^!_n = dim ⋂_i V^i R V^{n-2-i} for n = 0 … n_max."""
    lattice = lattice or RelationLattice(presentation)
    dims = []
    for n in range(n_max + 1):
        dims.append(sum(lattice.dual_space(n, w).dim for w in lattice.weight_vectors(n)))
        emit("LINALG", f"{presentation.name}: dim A!_{n} = {dims[-1]}")
    return dims


def duality_convolution(primal: Sequence[int], dual: Sequence[int]) -> List[int]:
    """
    Coefficients of H_A(x) · H_{A!}(-x) up to the shorter horizon.

    A Koszul algebra gives [1, 0, 0, ...]. A nonzero entry rules Koszulness
    out; all zeros is only necessary.
    """
    horizon = min(len(primal), len(dual))
    return [sum((-1) ** j * primal[n - j] * dual[j] for j in range(n + 1)) for n in range(horizon)]


def convolution_vanishes(values: Sequence[int]) -> bool:
    return bool(values) and values[0] == 1 and all(v == 0 for v in values[1:])
