"""
Degree-bounded diamond-lemma completion.

Starting from the relations of a presentation, `complete` builds a reduced
rewriting system whose ambiguities of degree ≤ cap all resolve:

1. every relation is reduced and, if nonzero, made monic and turned into a
   rule lhs → rhs (lhs = leading word);
2. ambiguities are processed in increasing degree of the ambiguous word
   (ties broken lexicographically on that word); an S-polynomial that does
   not reduce to zero becomes a new rule;
3. after each new rule the system is inter-reduced: rules whose lhs contains
   the new lhs are re-queued, right-hand sides are reduced.

For homogeneous relations the result in degrees ≤ cap is the reduced
Gröbner basis for the order, so it does not depend on processing order.
"""

from dataclasses import dataclass
from itertools import groupby
from typing import Any, Dict, List, Optional, Sequence, Tuple, TYPE_CHECKING

from ..algebra.fields import Field
from ..algebra.poly import Poly
from ..algebra.words import Generator, MonomialOrder, Word, find_factor, label_index
from ..counting.automaton import Pattern
from ..config.settings import DEFAULT_CONFIG
from ..errors import CompletionError, ParseError, RuleNotFoundError
from ..utils.logger import emit
from .ambiguities import Ambiguity, find_ambiguities, s_polynomial
from .system import RewriteSystem, Rule

if TYPE_CHECKING:
    from ..quadratic.presentation import Presentation


@dataclass(frozen=True)
class AmbiguityRecord:
    """How one ambiguity was handled during completion."""
    ambiguity: Ambiguity
    status: str  # "resolved" or "new_rule"
    new_lhs: Optional[Word] = None


class Completion:
    """State of one completion run: the growing system plus its resolution log."""

    def __init__(self, generators: Sequence[Generator], order: MonomialOrder,
                 field: Field, cap: int, max_rules: int):
        self.system = RewriteSystem(generators, order, field, degree_cap=cap)
        self.cap = cap
        self.max_rules = max_rules
        self.records: List[AmbiguityRecord] = []
        self._processed = set()

    def insert(self, poly: Poly) -> Optional[Word]:
        """Reduce poly and, if nonzero, add it as a rule; returns the new lhs."""
        system = self.system
        queue = [poly]
        first_lhs: Optional[Word] = None
        while queue:
            reduced = system.reduce(queue.pop(0))
            if reduced.is_zero():
                continue
            lhs = self._add_monic(reduced, queue)
            if first_lhs is None:
                first_lhs = lhs
        if len(system) > self.max_rules:
            raise CompletionError(
                f"completion exceeded {self.max_rules} rules at cap {self.cap}; "
                "raise max_rules or lower the cap"
            )
        return first_lhs

    def _add_monic(self, poly: Poly, queue: List[Poly]) -> Word:
        system = self.system
        f = system.field
        word, coeff = poly.leading_term(system.order)
        if f.is_zero(coeff):
            raise CompletionError(f"leading coefficient of {word} vanishes in {f.descriptor()}")
        monic = poly.scale(f.inv(coeff))
        rhs = Poly.monomial(word, 1, f) - monic

        for i in reversed(range(len(system.rules))):
            if find_factor(system.rules[i].lhs, word) >= 0:
                queue.append(system.remove_rule(i).as_poly())
        system.add_rule(Rule(word, rhs))

        for i, rule in enumerate(system.rules):
            if any(find_factor(w, word) >= 0 for w in rule.rhs.terms):
                system.replace_rule(i, Rule(rule.lhs, system.reduce(rule.rhs)))
        return word

    def pending(self, degree: int) -> List[Ambiguity]:
        return [a for a in find_ambiguities(self.system)
                if a.degree <= degree and a.key() not in self._processed]

    def resolve(self, ambiguity: Ambiguity) -> AmbiguityRecord:
        self._processed.add(ambiguity.key())
        s_poly = s_polynomial(self.system, ambiguity)
        new_lhs = self.insert(s_poly)
        record = AmbiguityRecord(ambiguity, "resolved" if new_lhs is None else "new_rule", new_lhs)
        self.records.append(record)
        return record

    def run(self, relations: Sequence[Poly]) -> RewriteSystem:
        for relation in relations:
            self.insert(relation)
        emit("COMPLETE", f"degree 2: {len(self.system)} rules from {len(relations)} relations")

        for degree in range(2, self.cap + 1):
            new_rules = 0
            handled = 0
            while True:
                pending = self.pending(degree)
                if not pending:
                    break
                record = self.resolve(pending[0])
                handled += 1
                if record.status == "new_rule":
                    new_rules += 1
            if handled:
                emit("COMPLETE", f"degree {degree}: {handled} ambiguities, {new_rules} new rules")

        self.system.unresolved = [a for a in find_ambiguities(self.system)
                                  if a.key() not in self._processed]
        return self.system


def complete_relations(generators: Sequence[Generator], relations: Sequence[Poly],
                       order: MonomialOrder, cap: int, field: Field,
                       max_rules: Optional[int] = None) -> Tuple[RewriteSystem, List[AmbiguityRecord]]:
    """Complete an explicit relation list; returns the system and its resolution log."""
    if cap < 2:
        raise ValueError(f"degree cap must be at least 2, got {cap}")
    run = Completion(generators, order, field, cap,
                     max_rules if max_rules is not None else DEFAULT_CONFIG.max_rules)
    system = run.run([r.over(field) for r in relations])
    return system, run.records


def complete(presentation: 'Presentation', order: MonomialOrder, cap: int,
             max_rules: Optional[int] = None) -> RewriteSystem:
    """
    Complete a presentation's relations up to degree cap.

    Args:
        presentation: Source of generators, relations and field
        order: Monomial order deciding leading words
        cap: Largest ambiguity degree to resolve
        max_rules: Runaway guard (defaults to EngineConfig.max_rules)

    Returns:
        The completed RewriteSystem; `unresolved` lists ambiguities above cap
        and `records` (attribute) the resolution log.
    """
    system, records = complete_relations(presentation.generators, presentation.relations,
                                         order, cap, presentation.field, max_rules)
    system.records = records
    return system


def family_coefficient(system: RewriteSystem, n: int, head: str = "e", star: str = "f",
                       tail: str = "b", witness: str = "d") -> Any:
    """
    −(coefficient of witness·star^n·tail) in the rule for head·star^n·tail.

    With the default letters this reads the d f^n b coefficient of the
    e f^n b rule of the completed associated graded K_3 presentation.
    """
    lookup = label_index(system.generators)
    try:
        h, s, t, p = (lookup[x] for x in (head, star, tail, witness))
    except KeyError as missing:
        raise ParseError(f"unknown generator {missing} for family_coefficient") from None
    lhs = (h,) + (s,) * n + (t,)
    rule = system.rule_for(lhs)
    return system.field.neg(rule.rhs.coefficient((p,) + (s,) * n + (t,)))


def conjecture_family(system: RewriteSystem, min_support: Optional[int] = None) -> List[Pattern]:
    """
    Guess infinite families u·g^j·v (j ≥ 1) among the left-hand sides.

    A family is proposed when the lhs words u·g^j·v (u not ending in g, v not
    starting with g) cover a run of at least min_support consecutive exponents
    that reaches the largest j the degree cap allows. Every such conjecture is
    reported as a star Pattern; the caller decides whether to trust it.
    """
    if min_support is None:
        min_support = DEFAULT_CONFIG.family_min_support
    lhs_words = system.lhs_words()
    if not lhs_words:
        return []
    cap = system.degree_cap or max(len(w) for w in lhs_words)

    groups: Dict[Tuple[Word, int, Word], set] = {}
    for word in lhs_words:
        position = 0
        for letter, run in groupby(word):
            length = len(list(run))
            prefix, suffix = word[:position], word[position + length:]
            groups.setdefault((prefix, letter, suffix), set()).add(length)
            position += length

    families: List[Pattern] = []
    for (prefix, letter, suffix), exponents in sorted(groups.items()):
        top = cap - len(prefix) - len(suffix)
        if top not in exponents:
            continue
        low = top
        while low - 1 in exponents:
            low -= 1
        if top - low + 1 < min_support:
            continue
        families.append(Pattern(prefix + (letter,) * (low - 1), letter, suffix))
    return families


def forbidden_patterns(system: RewriteSystem, min_support: Optional[int] = None) -> List[Pattern]:
    """Finite lhs words not covered by a conjectured family, followed by the families."""
    families = conjecture_family(system, min_support)
    finite = [Pattern(w) for w in system.lhs_words()
              if not any(f.matches(w) for f in families)]
    return finite + families
