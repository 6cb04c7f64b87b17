"""
Diagonalizing the cyclic vertex symmetry of graph presentations.

σ = (1 2 3) acts on generators by u(A) ↦ u(σA). For an orbit (g_0, g_1, g_2)
with g_{j+1} = σ g_j the vectors E_k = Σ_j ω^{jk} g_j are eigenvectors,
T E_k = ω^{-k} E_k, and g_j = (1/3) Σ_k ω^{-jk} E_k recovers the old basis.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Tuple

from ..algebra.fields import CycloNumber, QQ_OMEGA
from ..algebra.poly import Poly
from ..algebra.words import Generator
from ..errors import PresentationError
from ..linear.subspace import is_subspace, span
from .presentation import Presentation

# ω^0, ω^1, ω^2
OMEGA_POWERS = (CycloNumber(1, 0), CycloNumber(0, 1), CycloNumber(-1, -1))
ORBIT_LABELS = {1: ("v1", "v2", "v3"), 2: ("u1", "uw", "uw2")}


def _rotate(subset: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sorted(v % 3 + 1 for v in subset))


def vertex_cycle(presentation: Presentation) -> Dict[int, int]:
    """
    The generator permutation induced by σ = (1 2 3) on vertex subsets.

    Raises:
        PresentationError: a generator has no subset of {1, 2, 3} or its image is missing
    """
    by_subset = {}
    for g in presentation.generators:
        if not g.subset or not set(g.subset) <= {1, 2, 3}:
            raise PresentationError(f"generator {g.label} is not a subset generator on vertices 1..3")
        by_subset[tuple(sorted(g.subset))] = g.id
    permutation = {}
    for g in presentation.generators:
        image = _rotate(g.subset)
        if image not in by_subset:
            raise PresentationError(f"image of {g.label} under the vertex cycle is not a generator")
        permutation[g.id] = by_subset[image]
    return permutation


def permute(poly: Poly, permutation: Dict[int, int]) -> Poly:
    return Poly(poly.field, {tuple(permutation[g] for g in w): c for w, c in poly.terms.items()})


def is_invariant(presentation: Presentation, permutation: Dict[int, int]) -> bool:
    """Does the permutation map the span of R into itself?"""
    relation_span = presentation.relation_span()
    moved = span([permute(r, permutation) for r in presentation.relations],
                 presentation.component(2), presentation.field)
    return is_subspace(moved, relation_span)


@dataclass(frozen=True)
class CyclicEigenbasis:
    """Change of basis to T-eigenvectors, with the eigenvalue exponent of each new generator."""
    source: Presentation
    result: Presentation
    images: Dict[int, Poly]  # old generator -> combination of new generators
    exponents: Tuple[int, ...]  # T E = ω^exponent E

    def act(self, poly: Poly) -> Poly:
        """Apply T to a polynomial written in the eigenbasis."""
        f = poly.field
        return Poly(f, {
            w: f.mul(c, OMEGA_POWERS[sum(self.exponents[g] for g in w) % 3])
            for w, c in poly.terms.items()
        })

    def is_stable(self) -> bool:
        """T maps the transformed relation span to itself."""
        target = self.result
        moved = span([self.act(r) for r in target.relations], target.component(2), target.field)
        return is_subspace(moved, target.relation_span())


def _orbits(permutation: Dict[int, int]) -> List[Tuple[int, ...]]:
    seen = set()
    orbits = []
    for g in sorted(permutation):
        if g in seen:
            continue
        orbit = [g]
        nxt = permutation[g]
        while nxt != g:
            orbit.append(nxt)
            nxt = permutation[nxt]
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return orbits


def compute_eigenbasis(presentation: Presentation) -> CyclicEigenbasis:
    """
    Rewrite R in the eigenbasis of the vertex cycle, over Q(ω).

    Raises:
        PresentationError: the relation span is not invariant under the cycle
    """
    permutation = vertex_cycle(presentation)
    if not is_invariant(presentation, permutation):
        raise PresentationError(f"{presentation.name} is not invariant under the vertex cycle")
    field = QQ_OMEGA
    third = CycloNumber(Fraction(1, 3), 0)
    generators = list(presentation.generators)
    exponents = [0] * presentation.size
    images: Dict[int, Poly] = {}
    used_weights = set()
    for orbit in _orbits(permutation):
        if len(orbit) == 1:
            images[orbit[0]] = Poly.monomial((orbit[0],), 1, field)
            continue
        if len(orbit) != 3:
            raise PresentationError(f"vertex cycle orbit {orbit} does not have length 3")
        weight = presentation.generators[orbit[0]].weight
        labels = ORBIT_LABELS.get(weight) if weight not in used_weights else None
        used_weights.add(weight)
        for k, g in enumerate(orbit):
            old = presentation.generators[g]
            label = labels[k] if labels else f"{presentation.generators[orbit[0]].label}_{k}"
            generators[g] = Generator(g, label, old.weight)
            exponents[g] = (-k) % 3
        for j, g in enumerate(orbit):
            images[g] = Poly(field, {(orbit[k],): third * OMEGA_POWERS[(-j * k) % 3] for k in range(3)})
    relations = [r.over(field).substitute(images) for r in presentation.relations]
    result = Presentation(tuple(generators), tuple(relations), field,
                          name=f"eigen({presentation.name})",
                          flags=presentation.flags).canonical()
    return CyclicEigenbasis(presentation, result, images, tuple(exponents))


def eigenbasis(presentation: Presentation) -> Presentation:
    return compute_eigenbasis(presentation).result
