"""
Distributivity of triples of subspaces.

For X, Y, Z in a modular lattice the sublattice they generate is distributive
exactly when

    (X ∩ Y) + (Y ∩ Z) + (Z ∩ X)  ==  (X + Y) ∩ (Y + Z) ∩ (Z + X)

(the left side is always contained in the right). `generated_sublattice`
enumerates the closure under + and ∩ directly; it has at most 28 elements
and serves as a slow cross-check of the median test.
"""

from dataclasses import dataclass
from typing import List, Sequence

from ..errors import SublatticeLimitError
from .subspace import Subspace, intersect, intersect_all, subspace_sum


@dataclass(frozen=True)
class MedianPair:
    """Both sides of the median identity for a triple."""
    left: Subspace  # (X ∩ Y) + (Y ∩ Z) + (Z ∩ X)
    right: Subspace  # (X + Y) ∩ (Y + Z) ∩ (Z + X)

    @property
    def distributive(self) -> bool:
        return self.left == self.right


def median_pair(x: Subspace, y: Subspace, z: Subspace) -> MedianPair:
    left = subspace_sum(intersect(x, y), intersect(y, z), intersect(z, x))
    right = intersect_all([subspace_sum(x, y), subspace_sum(y, z), subspace_sum(z, x)])
    return MedianPair(left, right)


def distributive_triple(x: Subspace, y: Subspace, z: Subspace) -> bool:
    return median_pair(x, y, z).distributive


def generated_sublattice(generators: Sequence[Subspace], limit: int = 64) -> List[Subspace]:
    """Closure of the generators under sum and intersection (raises past `limit` elements)."""
    elements: List[Subspace] = []
    seen = set()
    for s in generators:
        if s.key() not in seen:
            seen.add(s.key())
            elements.append(s)
    changed = True
    while changed:
        changed = False
        snapshot = list(elements)
        for i, a in enumerate(snapshot):
            for b in snapshot[i + 1:]:
                for c in (subspace_sum(a, b), intersect(a, b)):
                    if c.key() not in seen:
                        seen.add(c.key())
                        elements.append(c)
                        changed = True
                        if len(elements) > limit:
                            raise SublatticeLimitError(f"sublattice grew past {limit} elements")
    return elements


def is_distributive_lattice(elements: Sequence[Subspace]) -> bool:
    """Check a ∩ (b + c) == (a ∩ b) + (a ∩ c) for every triple of elements."""
    for a in elements:
        for b in elements:
            for c in elements:
                if intersect(a, subspace_sum(b, c)) != subspace_sum(intersect(a, b), intersect(a, c)):
                    return False
    return True
