"""
Ambiguities of a rewriting system and their S-polynomials.

Two left-hand sides can compete for the same word in two ways:

- overlap: a proper suffix of lhs_i equals a proper prefix of lhs_j, and the
  word is lhs_i followed by the rest of lhs_j (self-overlaps included);
- inclusion: lhs_j occurs inside lhs_i (i ≠ j).

The S-polynomial is the difference of the two one-step reductions of the
ambiguous word. An ambiguity resolves when its S-polynomial reduces to zero.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..algebra.poly import Poly
from ..algebra.words import Word
from .system import RewriteSystem


@dataclass(frozen=True)
class Ambiguity:
    """Ambiguous word and the two rules (by lhs) that both apply to it."""
    kind: str  # "overlap" or "inclusion"
    left: Word  # lhs applied at position 0
    right: Word  # lhs applied at `offset`
    overlap_word: Word
    offset: int

    @property
    def degree(self) -> int:
        return len(self.overlap_word)

    def key(self) -> Tuple[str, Word, Word, int]:
        return (self.kind, self.left, self.right, self.offset)


def find_ambiguities(system: RewriteSystem) -> List[Ambiguity]:
    """
    All overlap and inclusion ambiguities of the system.

    Sorted by degree of the ambiguous word, then lexicographically (in the
    system's order) on that word, then by the rules involved.
    """
    lhs_words = system.lhs_words()
    found: List[Ambiguity] = []

    by_prefix: Dict[Word, List[Word]] = defaultdict(list)
    for lhs in lhs_words:
        for k in range(1, len(lhs)):
            by_prefix[lhs[:k]].append(lhs)

    for left in lhs_words:
        for k in range(1, len(left)):
            suffix = left[len(left) - k:]
            for right in by_prefix.get(suffix, ()):
                word = left + right[k:]
                found.append(Ambiguity("overlap", left, right, word, len(left) - k))

    for outer in lhs_words:
        for inner in lhs_words:
            if inner == outer or len(inner) > len(outer):
                continue
            for i in range(len(outer) - len(inner) + 1):
                if outer[i:i + len(inner)] == inner:
                    found.append(Ambiguity("inclusion", outer, inner, outer, i))

    order_key = system.order.key
    found.sort(key=lambda a: (len(a.overlap_word), order_key(a.overlap_word)[1],
                              order_key(a.left), order_key(a.right), a.offset))
    return found


def s_polynomial(system: RewriteSystem, ambiguity: Ambiguity) -> Poly:
    """
    Difference of the two one-step reductions of the ambiguous word.

    Overlap  (w = left·tail = head·right):  rhs(left)·tail − head·rhs(right)
    Inclusion (w = left = head·right·tail): rhs(left) − head·rhs(right)·tail
    """
    left_rule = system.rule_for(ambiguity.left)
    right_rule = system.rule_for(ambiguity.right)
    word = ambiguity.overlap_word
    head = word[:ambiguity.offset]
    tail_left = word[len(ambiguity.left):]
    tail_right = word[ambiguity.offset + len(ambiguity.right):]
    return (left_rule.rhs.sandwich((), tail_left)
            - right_rule.rhs.sandwich(head, tail_right))


def is_resolved(system: RewriteSystem, ambiguity: Ambiguity) -> bool:
    return system.reduce(s_polynomial(system, ambiguity)).is_zero()
