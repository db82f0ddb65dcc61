"""Internal contextual grammars with regular selection.

A grammar is an alphabet V, a finite list of axioms over V, and a list of
selection pairs.  Each pair couples a regular selection language S over a
declared subalphabet U of V with a non-empty set of contexts (u, v), u and v
words over V with uv non-empty.  One derivation step rewrites
``x1 x2 x3  ->  x1 u x2 v x3`` whenever ``x2`` lies in some pair's selection
and (u, v) is one of that pair's contexts.  Every step strictly lengthens the
word, which is what makes bounded enumeration and exact membership both
terminate.

Construction is deliberately permissive: malformed grammars can be built and
then inspected with :func:`validate`, which returns the full list of
diagnostics; the engine operations reject invalid grammars up front.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .automata import (Dfa, accepts, enumerate_regular, equivalent,
                       language_is_finite, minimize, nfa_to_dfa, regex_to_dfa)
from .errors import (DecompositionMismatchError, InvalidGrammarError,
                     NonFiniteSelectionError, ResourceLimitError)
from .monoid import DEFAULT_MONOID_CAP
from .regex import Regex, alt, seq, word_regex, Star, Literal
from .resources import SearchCaps, bounded_min_grammar, count_resources, min_states
from .rlgrammar import RightLinearGrammar, Rule, grammar_to_nfa
from .subregular import (FamilyLabel, Verdict, union_free_syntax,
                         _check_ordered, _check_circular, _check_combinational,
                         _check_commutative, _check_definite, _check_finite,
                         _check_monoidal, _check_nilpotent, _check_noncounting,
                         _check_power_separating, _check_suffix_closed)
from .words import Alphabet, Word, sort_words, word_to_text


def _fresh_start_name(taken: Alphabet) -> str:
    name = "S"
    while name in taken:
        name += "S"
    return name

DEFAULT_FRONTIER_CAP = 200_000


@dataclass(frozen=True)
class Context:
    """An insertion context: ``left`` goes before the selected infix,
    ``right`` after it.  Validity (left+right non-empty, symbols in the
    grammar alphabet) is checked by :func:`validate`."""

    left: Word
    right: Word

    @property
    def weight(self) -> int:
        return len(self.left) + len(self.right)

    def __str__(self) -> str:
        return f"({word_to_text(self.left)}, {word_to_text(self.right)})"


@dataclass(frozen=True)
class SelectionPair:
    """A selection language with its contexts.

    The selection is held as a complete DFA over ``declared_alphabet``; when
    the pair was written down as a regex or a right-linear grammar, that
    source form is retained verbatim (it serializes back out unchanged and
    doubles as a size certificate for resource questions).
    """

    declared_alphabet: Alphabet
    dfa: Dfa
    contexts: tuple[Context, ...]
    source_regex: Regex | None = None
    source_grammar: RightLinearGrammar | None = None

    @classmethod
    def from_regex(cls, declared: Alphabet, r: Regex,
                   contexts: Iterable[Context]) -> "SelectionPair":
        return cls(declared, regex_to_dfa(r, declared), tuple(contexts),
                   source_regex=r)

    @classmethod
    def from_grammar(cls, g: RightLinearGrammar,
                     contexts: Iterable[Context]) -> "SelectionPair":
        return cls(g.terminals, nfa_to_dfa(grammar_to_nfa(g)), tuple(contexts),
                   source_grammar=g)

    @classmethod
    def from_dfa(cls, d: Dfa, contexts: Iterable[Context]) -> "SelectionPair":
        return cls(d.alphabet, d, tuple(contexts))

    @classmethod
    def from_words(cls, declared: Alphabet, words: Iterable[Word],
                   contexts: Iterable[Context]) -> "SelectionPair":
        """Finite selection; keeps a one-nonterminal grammar as the source."""
        words = sort_words(set(words), declared)
        start = _fresh_start_name(declared)
        g = RightLinearGrammar(
            (start,), declared,
            tuple(Rule(start, w, None) for w in words), start)
        return cls.from_grammar(g, contexts)

    def selects(self, w: Word) -> bool:
        for s in w:
            if s not in self.declared_alphabet:
                return False
        return accepts(self.dfa, w)


@dataclass(frozen=True)
class ContextualGrammar:
    alphabet: Alphabet
    axioms: tuple[Word, ...]
    pairs: tuple[SelectionPair, ...]

    def __post_init__(self):
        deduped = tuple(dict.fromkeys(self.axioms))
        if deduped != self.axioms:
            object.__setattr__(self, "axioms", deduped)


@dataclass(frozen=True)
class Diagnostic:
    where: str
    message: str

    def __str__(self) -> str:
        return f"{self.where}: {self.message}"


def validate(g: ContextualGrammar) -> list[Diagnostic]:
    """All structural problems of the grammar; empty list means well-formed."""
    problems: list[Diagnostic] = []
    for i, w in enumerate(g.axioms):
        for s in w:
            if s not in g.alphabet:
                problems.append(Diagnostic(
                    f"axiom {i + 1}", f"symbol {s!r} not in the alphabet"))
                break
    for i, pair in enumerate(g.pairs):
        where = f"pair {i + 1}"
        if not pair.declared_alphabet.is_subset_of(g.alphabet):
            problems.append(Diagnostic(
                where, "declared subalphabet is not a subset of the alphabet"))
        if pair.dfa.alphabet != pair.declared_alphabet:
            problems.append(Diagnostic(
                where, "selection automaton alphabet differs from the "
                       "declared subalphabet"))
        if pair.source_grammar is not None \
                and pair.source_grammar.terminals != pair.declared_alphabet:
            problems.append(Diagnostic(
                where, "selection grammar terminals differ from the declared "
                       "subalphabet"))
        if not pair.contexts:
            problems.append(Diagnostic(where, "pair has no contexts"))
        for j, ctx in enumerate(pair.contexts):
            cwhere = f"{where}, context {j + 1}"
            if not ctx.left and not ctx.right:
                problems.append(Diagnostic(cwhere, "empty context (both sides empty)"))
            for s in ctx.left + ctx.right:
                if s not in g.alphabet:
                    problems.append(Diagnostic(
                        cwhere, f"symbol {s!r} not in the alphabet"))
                    break
    return problems


def ensure_valid(g: ContextualGrammar) -> None:
    problems = validate(g)
    if problems:
        raise InvalidGrammarError(
            f"invalid contextual grammar ({len(problems)} problem(s)): "
            + "; ".join(str(p) for p in problems),
            diagnostics=problems)


@dataclass(frozen=True)
class DerivationStep:
    """One internal insertion, fully annotated: the source splits as
    x1 x2 x3 and the target is x1 . left . x2 . right . x3."""

    source: Word
    x1: Word
    x2: Word
    x3: Word
    pair_index: int
    context: Context
    target: Word

    def __str__(self) -> str:
        return (f"{word_to_text(self.source)} => {word_to_text(self.target)}"
                f"  [pair {self.pair_index + 1}, {self.context}, "
                f"infix {word_to_text(self.x2)}]")


def _steps_unchecked(g: ContextualGrammar, w: Word,
                     max_len: int | None = None):
    n = len(w)
    for pair_index, pair in enumerate(g.pairs):
        declared = pair.declared_alphabet
        dfa = pair.dfa
        for i in range(n + 1):
            q = dfa.initial
            j = i
            while True:
                if q in dfa.accepting:
                    x1, x2, x3 = w[:i], w[i:j], w[j:]
                    for ctx in pair.contexts:
                        if max_len is not None and n + ctx.weight > max_len:
                            continue
                        yield DerivationStep(
                            w, x1, x2, x3, pair_index, ctx,
                            x1 + ctx.left + x2 + ctx.right + x3)
                if j >= n or w[j] not in declared:
                    break
                q = dfa.delta[(q, w[j])]
                j += 1


def derive_step(g: ContextualGrammar, w: Word) -> tuple[DerivationStep, ...]:
    """All single-step successors of ``w``, in deterministic order
    (pair index, infix start, infix end, context order)."""
    ensure_valid(g)
    g.alphabet.check_word(w)
    return tuple(_steps_unchecked(g, w))


def successors(g: ContextualGrammar, w: Word) -> set[Word]:
    return {s.target for s in derive_step(g, w)}


def enumerate_ic(g: ContextualGrammar, max_len: int, *,
                 frontier_cap: int = DEFAULT_FRONTIER_CAP) -> set[Word]:
    """Every derivable word of length <= max_len.

    Exact: insertion steps strictly grow words, so axioms longer than the
    bound can never contribute and the closure below the bound is finite.
    """
    ensure_valid(g)
    for w in g.axioms:
        g.alphabet.check_word(w)
    seen: set[Word] = {w for w in g.axioms if len(w) <= max_len}
    frontier = list(seen)
    while frontier:
        nxt: list[Word] = []
        for w in frontier:
            for step in _steps_unchecked(g, w, max_len):
                t = step.target
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
                    if len(seen) > frontier_cap:
                        raise ResourceLimitError(
                            f"enumeration exceeded {frontier_cap} words",
                            cap=frontier_cap, reached=len(seen))
        frontier = nxt
    return seen


def _predecessor_steps(g: ContextualGrammar, w: Word):
    """Inverse steps: every way to read ``w`` as x1 u x2 v x3 with x2 in some
    selection, yielding (predecessor x1 x2 x3, forward step)."""
    n = len(w)
    for pair_index, pair in enumerate(g.pairs):
        for ctx_index, ctx in enumerate(pair.contexts):
            u, v = ctx.left, ctx.right
            lu, lv = len(u), len(v)
            for i in range(n - lu - lv + 1):
                if w[i:i + lu] != u:
                    continue
                for k in range(i + lu, n - lv + 1):
                    if w[k:k + lv] != v:
                        continue
                    x1, x2, x3 = w[:i], w[i + lu:k], w[k + lv:]
                    if pair.selects(x2):
                        pred = x1 + x2 + x3
                        yield pred, DerivationStep(pred, x1, x2, x3,
                                                   pair_index, ctx, w)


def member_ic(g: ContextualGrammar, w: Word) -> bool:
    """Exact membership by backward search (memoized; every inverse step
    strictly shortens the word, so the search space is finite)."""
    return _member(g, w, {}) is not None


def member_trace(g: ContextualGrammar, w: Word
                 ) -> tuple[DerivationStep, ...] | None:
    """A derivation of ``w`` from an axiom as a forward step sequence, or
    None when ``w`` is not in the language.  Axioms get the empty trace."""
    return _member(g, w, {})


def _member(g: ContextualGrammar, w: Word,
            memo: dict | None) -> tuple[DerivationStep, ...] | None:
    ensure_valid(g)
    g.alphabet.check_word(w)
    return _member_rec(g, w, {} if memo is None else memo)


def _member_rec(g: ContextualGrammar, w: Word,
                memo: dict) -> tuple[DerivationStep, ...] | None:
    if w in memo:
        return memo[w]
    memo[w] = None  # provisional: cuts off re-exploration of this word
    if w in g.axioms:
        memo[w] = ()
        return memo[w]
    for pred, step in _predecessor_steps(g, w):
        sub = _member_rec(g, pred, memo)
        if sub is not None:
            memo[w] = sub + (step,)
            return memo[w]
    return None


def _pair_selection_words(pair: SelectionPair) -> list[Word]:
    dm = minimize(pair.dfa)
    if not language_is_finite(dm):
        raise NonFiniteSelectionError(
            "selection language is infinite; only finite selections can be "
            "split into singletons")
    words = enumerate_regular(dm, len(dm.states) - 1)
    return sort_words(words, pair.declared_alphabet)


def split_finite_selection(g: ContextualGrammar) -> ContextualGrammar:
    """Replace every (finite) selection by one singleton pair per word.

    The derivation relation is unchanged step for step; each new pair carries
    a one-nonterminal, one-rule grammar as its certificate.  Pairs whose
    selection is empty select nothing and are simply dropped.
    """
    ensure_valid(g)
    new_pairs: list[SelectionPair] = []
    for pair in g.pairs:
        for w in _pair_selection_words(pair):
            new_pairs.append(SelectionPair.from_words(
                pair.declared_alphabet, [w], pair.contexts))
    return ContextualGrammar(g.alphabet, g.axioms, tuple(new_pairs))


def split_definite_selection(
        g: ContextualGrammar,
        decompositions: Iterable[tuple[Iterable[Word], Iterable[Word]]],
) -> ContextualGrammar:
    """Split each selection S, given as S = A  ∪  U*B with A, B finite, into
    a finite pair (selection A) and a suffix pair (selection U*B).

    The claimed decomposition is verified by automaton equivalence before it
    is used; a mismatch raises :class:`DecompositionMismatchError`.  Empty
    parts produce no pair.
    """
    ensure_valid(g)
    decs = list(decompositions)
    if len(decs) != len(g.pairs):
        raise DecompositionMismatchError(
            f"{len(g.pairs)} pairs but {len(decs)} decompositions")
    new_pairs: list[SelectionPair] = []
    for index, (pair, (a_words, b_words)) in enumerate(zip(g.pairs, decs)):
        u = pair.declared_alphabet
        a_words = sort_words(set(a_words), u)
        b_words = sort_words(set(b_words), u)
        claimed = alt([word_regex(w) for w in a_words]
                      + [seq([Star(alt([Literal(s) for s in u])),
                              word_regex(w)]) for w in b_words])
        if not equivalent(regex_to_dfa(claimed, u), pair.dfa):
            raise DecompositionMismatchError(
                f"pair {index + 1}: A ∪ U*B does not equal the selection")
        if a_words:
            new_pairs.append(SelectionPair.from_words(u, a_words, pair.contexts))
        if b_words:
            start = _fresh_start_name(u)
            rules = tuple(Rule(start, (s,), start) for s in u) + \
                tuple(Rule(start, w, None) for w in b_words)
            suffix_grammar = RightLinearGrammar((start,), u, rules, start)
            new_pairs.append(SelectionPair.from_grammar(suffix_grammar,
                                                        pair.contexts))
    return ContextualGrammar(g.alphabet, g.axioms, tuple(new_pairs))


# --- selection-family questions ------------------------------------------

@dataclass(frozen=True)
class PairVerdict:
    pair_index: int
    verdict: Verdict
    note: str = ""


@dataclass(frozen=True)
class SelectionFamilyResult:
    family: FamilyLabel
    overall: Verdict
    per_pair: tuple[PairVerdict, ...]


_STRUCTURAL_CHECKS = {
    "MON": _check_monoidal,
    "FIN": _check_finite,
    "NIL": _check_nilpotent,
    "COMB": _check_combinational,
    "DEF": _check_definite,
    "SUF": _check_suffix_closed,
    "COMM": _check_commutative,
    "CIRC": _check_circular,
}


def selection_in_family(g: ContextualGrammar, label: FamilyLabel, *,
                        monoid_cap: int = DEFAULT_MONOID_CAP,
                        caps: SearchCaps = SearchCaps()
                        ) -> SelectionFamilyResult:
    """Do all selection languages of ``g`` lie in the given family?

    Structural families are decided outright (NC/PS up to the monoid cap).
    Nonterminal/rule bounds are semi-decided: yes when a small enough grammar
    is in hand or is found by bounded search, unknown otherwise.  State
    bounds are exact.
    """
    ensure_valid(g)
    per_pair: list[PairVerdict] = []
    for i, pair in enumerate(g.pairs):
        per_pair.append(_pair_family_verdict(i, pair, label, monoid_cap, caps))
    if any(pv.verdict is Verdict.NO for pv in per_pair):
        overall = Verdict.NO
    elif all(pv.verdict is Verdict.YES for pv in per_pair):
        overall = Verdict.YES
    else:
        overall = Verdict.UNKNOWN
    return SelectionFamilyResult(label, overall, tuple(per_pair))


def _pair_family_verdict(i: int, pair: SelectionPair, label: FamilyLabel,
                         monoid_cap: int, caps: SearchCaps) -> PairVerdict:
    kind = label.kind
    if kind in _STRUCTURAL_CHECKS:
        ok, ev = _STRUCTURAL_CHECKS[kind](minimize(pair.dfa))
        return PairVerdict(i, Verdict.YES if ok else Verdict.NO, ev.note)
    if kind == "ORD":
        try:
            v, ev = _check_ordered(minimize(pair.dfa), monoid_cap)
            return PairVerdict(i, v, ev.note)
        except ResourceLimitError as e:
            return PairVerdict(i, Verdict.UNKNOWN, f"monoid cap exceeded ({e.cap})")
    if kind in ("NC", "PS"):
        fn = _check_noncounting if kind == "NC" else _check_power_separating
        try:
            ok, ev = fn(minimize(pair.dfa), monoid_cap)
            return PairVerdict(i, Verdict.YES if ok else Verdict.NO, ev.note)
        except ResourceLimitError as e:
            return PairVerdict(i, Verdict.UNKNOWN, f"monoid cap exceeded ({e.cap})")
    if kind == "REG":
        return PairVerdict(i, Verdict.YES, "regular by construction")
    if kind == "UF":
        if pair.source_regex is not None:
            v = union_free_syntax(pair.source_regex)
            note = ("union-free expression as written" if v is Verdict.YES
                    else "expression uses union; syntactic check only")
            return PairVerdict(i, v, note)
        return PairVerdict(i, Verdict.UNKNOWN, "no source expression retained")
    if kind == "REG_Z":
        m = min_states(pair.dfa)
        ok = m <= label.n
        return PairVerdict(i, Verdict.YES if ok else Verdict.NO,
                           f"minimal complete automaton has {m} "
                           f"state{'' if m == 1 else 's'}")
    assert kind in ("RL_V", "RL_P")
    want = 0 if kind == "RL_V" else 1
    if pair.source_grammar is not None:
        have = count_resources(pair.source_grammar)[want]
        if have <= label.n:
            noun = "nonterminal" if want == 0 else "rule"
            return PairVerdict(i, Verdict.YES,
                               f"selection grammar as written has {have} "
                               f"{noun}{'' if have == 1 else 's'}")
    m = bounded_min_grammar(pair.dfa, "nonterminals" if want == 0 else "rules",
                            caps)
    if m.upper <= label.n:
        return PairVerdict(i, Verdict.YES, f"certificate found: {m.note}")
    return PairVerdict(i, Verdict.UNKNOWN,
                       f"no small enough grammar within caps ({m.note})")
