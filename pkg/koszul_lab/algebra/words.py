"""
Generators, words and monomial orders of the free associative algebra.

A word is a tuple of generator ids; the empty tuple is the unit. Orders are
degree-lexicographic: longer words are greater, and words of equal length
compare at the first differing position using a precedence list (highest
first), e.g. c > b > e > f > a > d.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import ParseError

Word = Tuple[int, ...]

EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class Generator:
    """A free generator: dense id, display label, positive weight, optional vertex subset."""
    id: int
    label: str
    weight: int = 1
    subset: Tuple[int, ...] = ()  # vertex set A for graph generators u(A)
    aliases: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError(f"generator {self.label} has non-positive weight {self.weight}")


def word_concat(*words: Word) -> Word:
    """Concatenate words (the monoid product)."""
    result: Word = ()
    for w in words:
        result = result + tuple(w)
    return result


def find_factor(word: Word, factor: Word, start: int = 0) -> int:
    """Index of the leftmost occurrence of factor in word at or after start, or -1."""
    k = len(factor)
    for i in range(start, len(word) - k + 1):
        if word[i:i + k] == factor:
            return i
    return -1


def word_weight(word: Word, generators: Sequence[Generator]) -> int:
    return sum(generators[g].weight for g in word)


def slot_weights(word: Word, generators: Sequence[Generator]) -> Tuple[int, ...]:
    """Per-position weight vector of a word."""
    return tuple(generators[g].weight for g in word)


def render_word(word: Word, generators: Sequence[Generator], sep: Optional[str] = None) -> str:
    """Labels joined by sep; single-character alphabets default to juxtaposition."""
    if not word:
        return "1"
    if sep is None:
        sep = "" if all(len(g.label) == 1 for g in generators) else "*"
    return sep.join(generators[g].label for g in word)


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class MonomialOrder:
    """
    Degree-lexicographic order given by a precedence list of generator ids.

    precedence[0] is the largest generator. The order is total and compatible
    with concatenation (u < v implies xuy < xvy).
    """
    precedence: Tuple[int, ...]
    _rank: Dict[int, int] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if len(set(self.precedence)) != len(self.precedence):
            raise ValueError(f"precedence list repeats a generator: {self.precedence}")
        n = len(self.precedence)
        self._rank.update({g: n - 1 - i for i, g in enumerate(self.precedence)})

    @classmethod
    def from_labels(cls, labels: Iterable[str], generators: Sequence[Generator]) -> 'MonomialOrder':
        """Build from labels, e.g. ["c", "b", "e", "f", "a", "d"] or "c>b>e>f>a>d"."""
        lookup = label_index(generators)
        ids = []
        for label in labels:
            label = label.strip()
            if label not in lookup:
                raise ParseError(f"unknown generator {label!r} in monomial order")
            ids.append(lookup[label])
        if sorted(ids) != list(range(len(generators))):
            raise ParseError("monomial order must list every generator exactly once")
        return cls(tuple(ids))

    @classmethod
    def parse(cls, text: str, generators: Sequence[Generator]) -> 'MonomialOrder':
        separator = ">" if ">" in text else ","
        return cls.from_labels([t for t in text.split(separator) if t.strip()], generators)

    def rank(self, generator: int) -> int:
        return self._rank[generator]

    def key(self, word: Word) -> Tuple[int, Tuple[int, ...]]:
        """Sort key: larger key means larger word."""
        rank = self._rank
        return (len(word), tuple(rank[g] for g in word))

    def compare(self, w1: Word, w2: Word) -> Ordering:
        k1, k2 = self.key(w1), self.key(w2)
        if k1 < k2:
            return Ordering.LT
        if k1 > k2:
            return Ordering.GT
        return Ordering.EQ

    def max_word(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)

    def sorted_desc(self, words: Iterable[Word]) -> List[Word]:
        return sorted(words, key=self.key, reverse=True)

    def render(self, generators: Sequence[Generator]) -> str:
        return ">".join(generators[g].label for g in self.precedence)


def label_index(generators: Sequence[Generator]) -> Dict[str, int]:
    """Map every label and alias to its generator id."""
    lookup: Dict[str, int] = {}
    for g in generators:
        lookup[g.label] = g.id
        for alias in g.aliases:
            lookup[alias] = g.id
    return lookup


def compare(order: MonomialOrder, w1: Word, w2: Word) -> Ordering:
    return order.compare(w1, w2)
