"""
Rewriting systems over k⟨V⟩.

A Rule lhs → rhs says "the word lhs equals the polynomial rhs", with every word
of rhs strictly smaller than lhs in the system's monomial order. Reduction
replaces occurrences of left-hand sides until no word of the polynomial
contains one; the result is the normal form when the system is confluent.
"""

import heapq
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra.fields import Field, QQ
from ..algebra.poly import Poly
from ..algebra.words import Generator, MonomialOrder, Word
from ..errors import RuleNotFoundError

# A reduction choice: (word, position of the lhs occurrence, rule index)
Redex = Tuple[Word, int, int]


@dataclass(frozen=True)
class Rule:
    """lhs → rhs; rhs has only words smaller than lhs."""
    lhs: Word
    rhs: Poly

    def as_poly(self) -> Poly:
        """lhs − rhs, the relation this rule encodes."""
        return Poly.monomial(self.lhs, 1, self.rhs.field) - self.rhs

    @property
    def degree(self) -> int:
        return len(self.lhs)


class RewriteSystem:
    """
    Ordered collection of rules sharing generators, order and field.

    Left-hand sides are unique. `degree_cap` and `unresolved` are filled in by
    completion: the cap it ran to and the ambiguities it left above the cap.
    """

    def __init__(self, generators: Sequence[Generator], order: MonomialOrder,
                 field: Field = QQ, rules: Iterable[Rule] = (),
                 degree_cap: Optional[int] = None):
        self.generators = tuple(generators)
        self.order = order
        self.field = field
        self.degree_cap = degree_cap
        self.unresolved: List[Any] = []
        self.records: List[Any] = []  # resolution log, filled by completion
        self.rules: List[Rule] = []
        self._index: Dict[Word, int] = {}
        self._lengths: List[int] = []
        for rule in rules:
            self.add_rule(rule)

    # -- bookkeeping ---------------------------------------------------

    def _reindex(self) -> None:
        self._index = {rule.lhs: i for i, rule in enumerate(self.rules)}
        self._lengths = sorted({len(rule.lhs) for rule in self.rules})

    def add_rule(self, rule: Rule) -> int:
        if rule.lhs in self._index:
            raise ValueError(f"duplicate left-hand side {rule.lhs}")
        self.rules.append(rule)
        self._reindex()
        return len(self.rules) - 1

    def replace_rule(self, index: int, rule: Rule) -> None:
        self.rules[index] = rule
        self._reindex()

    def remove_rule(self, index: int) -> Rule:
        rule = self.rules.pop(index)
        self._reindex()
        return rule

    def rule_for(self, lhs: Word) -> Rule:
        try:
            return self.rules[self._index[tuple(lhs)]]
        except KeyError:
            raise RuleNotFoundError(f"no rule with left-hand side {lhs}") from None

    def lhs_words(self) -> List[Word]:
        return [rule.lhs for rule in self.rules]

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    # -- matching ------------------------------------------------------

    def find_redex(self, word: Word) -> Optional[Tuple[int, int]]:
        """Leftmost (position, rule index) where some lhs occurs in word, or None."""
        index = self._index
        n = len(word)
        for i in range(n):
            for length in self._lengths:
                if i + length > n:
                    break
                hit = index.get(word[i:i + length])
                if hit is not None:
                    return i, hit
        return None

    def all_redexes(self, word: Word) -> List[Tuple[int, int]]:
        """Every (position, rule index) occurrence of a lhs in word."""
        found = []
        n = len(word)
        for i in range(n):
            for length in self._lengths:
                if i + length > n:
                    break
                hit = self._index.get(word[i:i + length])
                if hit is not None:
                    found.append((i, hit))
        return found

    def is_normal(self, word: Word) -> bool:
        return self.find_redex(tuple(word)) is None

    # -- reduction -----------------------------------------------------

    def rewrite_once(self, p: Poly, word: Word, position: int, rule_index: int) -> Poly:
        """Replace the occurrence of rules[rule_index].lhs at position in one term of p."""
        rule = self.rules[rule_index]
        coeff = p.terms[word]
        left, right = word[:position], word[position + len(rule.lhs):]
        replacement = rule.rhs.sandwich(left, right).scale(coeff)
        return p - Poly.monomial(word, coeff, p.field) + replacement

    def reduce(self, p: Poly, chooser: Optional[Callable[[List[Redex]], Redex]] = None) -> Poly:
        """
        Normal form of p.

        The default strategy rewrites the greatest reducible word at its
        leftmost reducible position. A chooser, given every available redex,
        picks one instead; confluent systems reach the same result either way.
        """
        if chooser is not None:
            return self._reduce_with(p, chooser)

        f = self.field
        order_key = self.order.key
        work: Dict[Word, Any] = dict(p.terms)
        heap = [(_neg_key(order_key(w)), w) for w in work]
        heapq.heapify(heap)
        queued = set(work)
        normal: Dict[Word, Any] = {}
        while heap:
            _, word = heapq.heappop(heap)
            queued.discard(word)
            coeff = work.pop(word, None)
            if coeff is None or f.is_zero(coeff):
                continue
            redex = self.find_redex(word)
            if redex is None:
                normal[word] = coeff
                continue
            position, rule_index = redex
            rule = self.rules[rule_index]
            left, right = word[:position], word[position + len(rule.lhs):]
            for sub, c in rule.rhs.terms.items():
                new_word = left + sub + right
                value = f.add(work.get(new_word, f.zero()), f.mul(coeff, c))
                work[new_word] = value
                if new_word not in queued:
                    queued.add(new_word)
                    heapq.heappush(heap, (_neg_key(order_key(new_word)), new_word))
        return Poly._raw(f, {w: c for w, c in normal.items() if not f.is_zero(c)})

    def _reduce_with(self, p: Poly, chooser: Callable[[List[Redex]], Redex]) -> Poly:
        current = p
        while True:
            redexes: List[Redex] = []
            for word in sorted(current.terms):
                for position, rule_index in self.all_redexes(word):
                    redexes.append((word, position, rule_index))
            if not redexes:
                return current
            word, position, rule_index = chooser(redexes)
            current = self.rewrite_once(current, word, position, rule_index)

    def normal_words(self, degree: int) -> int:
        """Number of normal words of a given length (brute force; small degrees only)."""
        from itertools import product
        return sum(1 for w in product(range(len(self.generators)), repeat=degree)
                   if self.is_normal(w))


def _neg_key(key: Tuple[int, Tuple[int, ...]]) -> Tuple[int, Tuple[int, ...]]:
    """Negate an order key so heapq pops the largest word first."""
    length, ranks = key
    return (-length, tuple(-r for r in ranks))


def reduce(system: RewriteSystem, p: Poly,
           chooser: Optional[Callable[[List[Redex]], Redex]] = None) -> Poly:
    return system.reduce(p, chooser)
