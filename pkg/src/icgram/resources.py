"""Resource measures of regular languages: minimal state count of a complete
DFA, and bounded searches for grammars with few nonterminals or few rules.

State counts are exact (minimization).  Grammar measures are decided by
exhaustive search over a capped candidate space; a hit is the minimum within
that space and comes with the found grammar as a certificate, a miss yields
an interval whose upper end is certified by the canonical grammar read off
the minimal automaton.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .automata import Dfa, minimize, nfa_to_dfa
from .rlgrammar import RightLinearGrammar, Rule, bounded_words, grammar_to_nfa
from .words import EMPTY_WORD, Alphabet

KINDS = ("states", "nonterminals", "rules")


@dataclass(frozen=True)
class SearchCaps:
    """Caps for the grammar search space."""

    max_nonterminals: int = 2
    max_rules: int = 4
    max_rhs_len: int = 3
    check_len: int = 8
    max_candidates: int = 200_000

    def describe(self) -> str:
        return (f"nonterminals<={self.max_nonterminals}, rules<={self.max_rules}, "
                f"rhs<={self.max_rhs_len}, filter length {self.check_len}")


@dataclass(frozen=True)
class ResourceMeasure:
    """Result of one resource measurement.

    ``exact`` means lower == upper and the value was established by the
    procedure; otherwise the true value lies in [lower, upper].  The
    certificate (a grammar, or the minimal DFA for state counts) always
    realizes ``upper``.
    """

    kind: str
    lower: int
    upper: int
    exact: bool
    certificate: object
    note: str = ""

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"measure of {self.kind} is an interval "
                             f"[{self.lower}, {self.upper}], not exact")
        return self.upper


def min_states(d: Dfa) -> int:
    """States of the minimal complete DFA (the sink, when needed, counts)."""
    return len(minimize(d).states)


def count_resources(g: RightLinearGrammar) -> tuple[int, int]:
    """(nonterminal count, rule count) of a grammar as written; an erasing
    rule counts like any other rule."""
    return len(g.nonterminals), len(g.rules)


def dfa_to_grammar(d: Dfa) -> RightLinearGrammar:
    """Right-linear grammar read off the automaton (one nonterminal per
    reachable state); certifies the fallback upper bounds."""
    dm = minimize(d)
    prefix = "Q"
    while any(str(s).startswith(prefix) for s in dm.alphabet):
        prefix += "Q"
    name = {q: f"{prefix}{q}" for q in dm.states}
    rules = []
    for q in dm.states:
        for a in dm.alphabet:
            rules.append(Rule(name[q], (a,), name[dm.delta[(q, a)]]))
        if q in dm.accepting:
            rules.append(Rule(name[q], EMPTY_WORD, None))
    return RightLinearGrammar(tuple(name[q] for q in dm.states), dm.alphabet,
                              tuple(rules), name[dm.initial])


def _rule_universe(nts: tuple[str, ...], terminals: Alphabet,
                   max_rhs_len: int) -> list[Rule]:
    words = [EMPTY_WORD]
    for k in range(1, max_rhs_len + 1):
        words.extend(product(terminals.symbols, repeat=k))
    universe = []
    for lhs in nts:
        for w in words:
            universe.append(Rule(lhs, tuple(w), None))
            for succ in nts:
                if not w and succ == lhs:
                    continue  # a self-unit rule can never help
                universe.append(Rule(lhs, tuple(w), succ))
    return universe


def _matches(candidate: RightLinearGrammar, target: Dfa,
             target_words: set, check_len: int) -> bool:
    if bounded_words(candidate, check_len) != target_words:
        return False
    return minimize(nfa_to_dfa(grammar_to_nfa(candidate))) == target


def bounded_min_grammar(d: Dfa, kind: str,
                        caps: SearchCaps = SearchCaps()) -> ResourceMeasure:
    """Smallest grammar for ``L(d)`` by ``kind`` within the capped space.

    ``kind`` is "nonterminals" or "rules".  The search enumerates candidate
    grammars in increasing order of the measured quantity, filters them
    against the language up to ``check_len``, and confirms survivors by full
    equivalence; the first hit is returned as an exact measure.  When the
    space is exhausted (or would exceed ``max_candidates``) the result is
    the interval [1, fallback] instead.
    """
    if kind not in ("nonterminals", "rules"):
        raise ValueError(f"kind must be 'nonterminals' or 'rules', got {kind!r}")
    target = minimize(d)
    target_words = bounded_words(dfa_to_grammar(target), caps.check_len)
    nt_names = _fresh_nonterminals(caps.max_nonterminals, d.alphabet)
    budget = caps.max_candidates
    capped = False

    if kind == "nonterminals":
        levels = [(v, r) for v in range(1, caps.max_nonterminals + 1)
                  for r in range(1, caps.max_rules + 1)]
    else:
        levels = [(v, r) for r in range(1, caps.max_rules + 1)
                  for v in (caps.max_nonterminals,)]

    for v, r in levels:
        nts = nt_names[:v]
        universe = _rule_universe(nts, d.alphabet, caps.max_rhs_len)
        n_level = comb(len(universe), r)
        if n_level > budget:
            capped = True
            break
        budget -= n_level
        for combo in combinations(universe, r):
            candidate = RightLinearGrammar(nts, d.alphabet, combo, nts[0])
            if _matches(candidate, target, target_words, caps.check_len):
                value = v if kind == "nonterminals" else r
                return ResourceMeasure(
                    kind, value, value, True, candidate,
                    f"exhaustive search ({caps.describe()})")

    fallback = dfa_to_grammar(target)
    upper = count_resources(fallback)[0 if kind == "nonterminals" else 1]
    reason = ("candidate budget exhausted" if capped
              else "no certificate within caps")
    return ResourceMeasure(kind, 1, upper, False, fallback,
                           f"{reason} ({caps.describe()}); upper bound from "
                           "the canonical automaton grammar")


def _fresh_nonterminals(count: int, terminals: Alphabet) -> tuple[str, ...]:
    prefix = "N"
    while any(str(s).startswith(prefix) for s in terminals):
        prefix += "N"
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


def measure(d: Dfa, kind: str, caps: SearchCaps = SearchCaps()) -> ResourceMeasure:
    """One-stop measurement used by the command line."""
    if kind == "states":
        dm = minimize(d)
        return ResourceMeasure("states", len(dm.states), len(dm.states), True,
                               dm, "minimal complete automaton")
    return bounded_min_grammar(d, kind, caps)
