"""
Counting words that avoid a set of forbidden patterns.

A Pattern is either a finite word or a star pattern u·g*·v standing for the
infinite family u·g^j·v, j ≥ 1 (written "ef*b" for e f^j b). Words avoiding
every pattern as a factor are recognized by a deterministic automaton built by
subset construction over the pattern positions (Aho–Corasick style, with a
self-loop position for each star). Counts by length come from iterating a
state vector against the automaton's transfer matrix, in exact integers.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.parse import parse_word
from ..algebra.words import Generator, Word
from ..errors import AutomatonError, ParseError

DEAD = -1


@dataclass(frozen=True)
class Pattern:
    """Finite word (star is None) or the family prefix·star^j·suffix, j ≥ 1."""
    prefix: Word
    star: Optional[int] = None
    suffix: Word = ()

    @property
    def is_finite(self) -> bool:
        return self.star is None

    @property
    def min_length(self) -> int:
        return len(self.prefix) + len(self.suffix) + (0 if self.star is None else 1)

    def letters(self) -> set:
        found = set(self.prefix) | set(self.suffix)
        if self.star is not None:
            found.add(self.star)
        return found

    def matches(self, word: Word) -> bool:
        """Is word itself a member of the pattern's language?"""
        word = tuple(word)
        if self.star is None:
            return word == tuple(self.prefix) + tuple(self.suffix)
        p, s = len(self.prefix), len(self.suffix)
        middle_length = len(word) - p - s
        if middle_length < 1 or word[:p] != self.prefix or word[len(word) - s:] != self.suffix:
            return False
        return all(x == self.star for x in word[p:p + middle_length])

    def occurs_in(self, word: Word) -> bool:
        """Does some factor of word match the pattern? (direct search, no automaton)"""
        word = tuple(word)
        if self.star is None:
            target = tuple(self.prefix) + tuple(self.suffix)
            k = len(target)
            return any(word[i:i + k] == target for i in range(len(word) - k + 1))
        p = len(self.prefix)
        for i in range(len(word) - p):
            if word[i:i + p] != self.prefix:
                continue
            j = i + p
            run = 0
            while j + run < len(word) and word[j + run] == self.star:
                run += 1
                start = j + run
                if word[start:start + len(self.suffix)] == self.suffix:
                    return True
        return False


def parse_patterns(text: str, generators: Sequence[Generator]) -> List[Pattern]:
    """Parse "cef, cd, ef*b": comma or whitespace separated; g* marks the star letter."""
    patterns: List[Pattern] = []
    for token in text.replace(",", " ").split():
        if token.count("*") > 1:
            raise ParseError(f"pattern {token!r} has more than one star")
        if "*" in token:
            head, tail = token.split("*")
            head_word = parse_word(head, generators)
            if not head_word:
                raise ParseError(f"star pattern {token!r} has no starred letter")
            patterns.append(Pattern(head_word[:-1], head_word[-1], parse_word(tail, generators)))
        else:
            patterns.append(Pattern(parse_word(token, generators)))
    return patterns


def render_pattern(pattern: Pattern, generators: Sequence[Generator]) -> str:
    """Inverse of parse_patterns for one pattern: labels juxtaposed, star letter followed by *."""
    parts = [generators[g].label for g in pattern.prefix]
    if pattern.star is not None:
        parts.append(generators[pattern.star].label + "*")
    parts.extend(generators[g].label for g in pattern.suffix)
    return "".join(parts)


@dataclass
class Automaton:
    """Deterministic avoidance automaton; state 0 is the start, DEAD rejects."""
    alphabet_size: int
    patterns: Tuple[Pattern, ...]
    transitions: List[List[int]] = field(default_factory=list)

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    def transfer_matrix(self) -> np.ndarray:
        """M[s, t] = number of letters leading from state s to state t (object dtype)."""
        size = self.state_count
        matrix = np.zeros((size, size), dtype=object)
        for s, row in enumerate(self.transitions):
            for t in row:
                if t != DEAD:
                    matrix[s, t] += 1
        return matrix

    def accepts(self, word: Word) -> bool:
        state = 0
        for letter in word:
            state = self.transitions[state][letter]
            if state == DEAD:
                return False
        return True


def _step(pattern: Pattern, pos: int, letter: int) -> List[int]:
    """Next positions of a partial match after reading letter."""
    p = len(pattern.prefix)
    if pos < p:
        return [pos + 1] if pattern.prefix[pos] == letter else []
    if pattern.star is None:
        return []
    if pos == p:
        return [p + 1] if letter == pattern.star else []
    consumed = pos - (p + 1)  # suffix letters read after the star run
    nxt = []
    if consumed == 0 and letter == pattern.star:
        nxt.append(pos)
    if consumed < len(pattern.suffix) and pattern.suffix[consumed] == letter:
        nxt.append(pos + 1)
    return nxt


def _accepting(pattern: Pattern, pos: int) -> bool:
    if pattern.star is None:
        return pos == len(pattern.prefix)
    return pos == len(pattern.prefix) + 1 + len(pattern.suffix)


def build_automaton(alphabet_size: int, forbidden: Sequence[Pattern]) -> Automaton:
    """
    Deterministic automaton accepting exactly the words with no forbidden factor.

    Args:
        alphabet_size: Number of letters (ids 0..alphabet_size-1)
        forbidden: Finite words and star patterns

    Returns:
        Automaton whose live states track the partial matches in progress
    """
    patterns = tuple(forbidden)
    for pattern in patterns:
        if pattern.min_length == 0:
            raise AutomatonError("the empty word cannot be forbidden")
        bad = [x for x in pattern.letters() if not 0 <= x < alphabet_size]
        if bad:
            raise AutomatonError(f"pattern uses letters {bad} outside an alphabet of {alphabet_size}")

    starts = [(i, 0) for i in range(len(patterns))]
    index: Dict[FrozenSet[Tuple[int, int]], int] = {frozenset(): 0}
    queue: List[FrozenSet[Tuple[int, int]]] = [frozenset()]
    transitions: List[List[int]] = []
    while len(transitions) < len(queue):
        current = queue[len(transitions)]
        row = []
        for letter in range(alphabet_size):
            nxt = set()
            dead = False
            for i, pos in list(current) + starts:
                for new_pos in _step(patterns[i], pos, letter):
                    if _accepting(patterns[i], new_pos):
                        dead = True
                        break
                    nxt.add((i, new_pos))
                if dead:
                    break
            if dead:
                row.append(DEAD)
                continue
            key = frozenset(nxt)
            if key not in index:
                index[key] = len(queue)
                queue.append(key)
            row.append(index[key])
        transitions.append(row)
    return Automaton(alphabet_size, patterns, transitions)


def count(automaton: Automaton, n: int) -> int:
    """Number of accepted words of length n."""
    return counts(automaton, n)[n]


def counts(automaton: Automaton, n_max: int) -> List[int]:
    """Accepted-word counts for lengths 0..n_max (exact big integers)."""
    matrix = automaton.transfer_matrix()
    vector = np.zeros(automaton.state_count, dtype=object)
    vector[:] = 0
    vector[0] = 1
    result = [1]
    for _ in range(n_max):
        vector = vector.dot(matrix)
        result.append(int(sum(vector)))
    return result


def brute_force_count(alphabet_size: int, forbidden: Sequence[Pattern], n: int) -> int:
    """Enumerate all words of length n and count those avoiding every pattern."""
    return sum(1 for word in product(range(alphabet_size), repeat=n)
               if not any(p.occurs_in(word) for p in forbidden))


def render_patterns(patterns: Sequence[Pattern], generators: Sequence[Generator]) -> List[str]:
    return [render_pattern(p, generators) for p in patterns]
