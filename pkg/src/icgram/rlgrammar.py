"""Right-linear grammars in the general form: rules ``A -> w B`` and
``A -> w`` with ``w`` an arbitrary terminal word (possibly empty).

The rule text format is one rule per line, ``@`` standing for the empty
word: ``S -> aa S``, ``S -> @``, ``S -> T`` (unit rule).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automata import Nfa
from .errors import InvalidGrammarError, TextFormatError
from .words import EMPTY_WORD, Alphabet, Word, word_from_text, word_to_text


@dataclass(frozen=True)
class Rule:
    lhs: str
    word: Word
    successor: str | None = None

    @property
    def erasing(self) -> bool:
        return not self.word and self.successor is None


@dataclass(frozen=True)
class RightLinearGrammar:
    nonterminals: tuple[str, ...]
    terminals: Alphabet
    rules: tuple[Rule, ...]
    start: str

    def __post_init__(self):
        nts = set(self.nonterminals)
        if len(nts) != len(self.nonterminals):
            raise InvalidGrammarError("duplicate nonterminals")
        if not nts:
            raise InvalidGrammarError("grammar needs at least one nonterminal")
        if self.start not in nts:
            raise InvalidGrammarError(f"start symbol {self.start!r} is not a nonterminal")
        if nts & set(self.terminals.symbols):
            clash = sorted(nts & set(self.terminals.symbols))
            raise InvalidGrammarError(f"nonterminals clash with terminals: {clash}")
        for r in self.rules:
            if r.lhs not in nts:
                raise InvalidGrammarError(f"rule for unknown nonterminal {r.lhs!r}")
            if r.successor is not None and r.successor not in nts:
                raise InvalidGrammarError(f"rule references unknown nonterminal {r.successor!r}")
            for s in r.word:
                if s not in self.terminals:
                    raise InvalidGrammarError(f"rule uses foreign symbol {s!r}")


def count_resources(g: RightLinearGrammar) -> tuple[int, int]:
    """(number of nonterminals, number of rules); erasing rules count."""
    return len(g.nonterminals), len(g.rules)


# --- compilation to an NFA ----------------------------------------------

_FIN = ("$fin",)


def _unit_closure(g: RightLinearGrammar) -> dict[str, set[str]]:
    """B in closure[A] iff A derives B by unit rules (A -> B with empty word)."""
    edges: dict[str, set[str]] = {a: set() for a in g.nonterminals}
    for r in g.rules:
        if not r.word and r.successor is not None:
            edges[r.lhs].add(r.successor)
    closure = {}
    for a in g.nonterminals:
        seen = {a}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for y in edges[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        closure[a] = seen
    return closure


def grammar_to_nfa(g: RightLinearGrammar) -> Nfa:
    """Compile to an epsilon-free NFA.

    Word rules become chains of fresh states; unit rules are removed by
    closure (every nonterminal inherits the outgoing moves and acceptance of
    everything it unit-derives).
    """
    closure = _unit_closure(g)
    states: set = set(g.nonterminals) | {_FIN}
    base: dict[str, dict[str, set]] = {a: {} for a in g.nonterminals}
    transitions: dict[tuple, set] = {}
    for idx, r in enumerate(g.rules):
        if not r.word:
            continue
        src: object = r.lhs
        for i, sym in enumerate(r.word):
            last = i == len(r.word) - 1
            target = (r.successor if r.successor is not None else _FIN) if last \
                else ("chain", idx, i + 1)
            if not last:
                states.add(target)
            if i == 0:
                base[r.lhs].setdefault(sym, set()).add(target)
            else:
                transitions.setdefault((src, sym), set()).add(target)
            src = target
    erasing = {a for a in g.nonterminals
               if any(r.erasing for r in g.rules if r.lhs in closure[a])}
    accepting = {_FIN} | erasing
    merged: dict[tuple, frozenset] = {}
    for a in g.nonterminals:
        outs: dict[str, set] = {}
        for b in closure[a]:
            for sym, targets in base[b].items():
                outs.setdefault(sym, set()).update(targets)
        for sym, targets in outs.items():
            merged[(a, sym)] = frozenset(targets)
    for key, targets in transitions.items():
        merged[key] = frozenset(targets)
    return Nfa(frozenset(states), g.terminals, merged,
               frozenset([g.start]), frozenset(accepting))


def normalize_regular(g: RightLinearGrammar) -> RightLinearGrammar:
    """Equivalent grammar in strict regular form: every rule is ``A -> a B``
    or ``A -> @`` (no unit rules, no multi-symbol words)."""
    closure = _unit_closure(g)
    prefix = "_"
    while any(nt.startswith(prefix) for nt in g.nonterminals):
        prefix += "_"
    fin = prefix + "fin"

    def chain_name(idx: int, pos: int) -> str:
        return f"{prefix}{idx}_{pos}"

    new_rules: list[Rule] = []
    fresh: list[str] = []
    fresh_seen: set[str] = set()
    used_fin = False
    chains_done: set[int] = set()
    for a in g.nonterminals:
        for b in closure[a]:
            for idx, r in enumerate(g.rules):
                if r.lhs != b:
                    continue
                if r.erasing:
                    new_rules.append(Rule(a, EMPTY_WORD, None))
                elif r.word:
                    end = r.successor if r.successor is not None else fin
                    used_fin = used_fin or r.successor is None
                    first_target = chain_name(idx, 1) if len(r.word) > 1 else end
                    new_rules.append(Rule(a, (r.word[0],), first_target))
                    if len(r.word) > 1 and idx not in chains_done:
                        chains_done.add(idx)
                        for i in range(1, len(r.word)):
                            name = chain_name(idx, i)
                            if name not in fresh_seen:
                                fresh_seen.add(name)
                                fresh.append(name)
                            target = chain_name(idx, i + 1) if i + 1 < len(r.word) else end
                            new_rules.append(Rule(name, (r.word[i],), target))
    if used_fin:
        fresh.append(fin)
        new_rules.append(Rule(fin, EMPTY_WORD, None))
    # dedupe rules, keep first occurrence order
    seen_rules: set[Rule] = set()
    rules = []
    for r in new_rules:
        if r not in seen_rules:
            seen_rules.add(r)
            rules.append(r)
    return RightLinearGrammar(g.nonterminals + tuple(fresh), g.terminals,
                              tuple(rules), g.start)


def bounded_words(g: RightLinearGrammar, max_len: int) -> set[Word]:
    """All derivable words of length <= max_len, by direct rule application.

    Independent of the automaton pipeline (usable as an oracle against it).
    """
    by_lhs: dict[str, list[Rule]] = {a: [] for a in g.nonterminals}
    for r in g.rules:
        by_lhs[r.lhs].append(r)
    out: set[Word] = set()
    seen = {(EMPTY_WORD, g.start)}
    queue = deque(seen)
    while queue:
        prefix, nt = queue.popleft()
        for r in by_lhs[nt]:
            w = prefix + r.word
            if len(w) > max_len:
                continue
            if r.successor is None:
                out.add(w)
            elif (w, r.successor) not in seen:
                seen.add((w, r.successor))
                queue.append((w, r.successor))
    return out


# --- text form ------------------------------------------------------------

def grammar_to_text(g: RightLinearGrammar) -> str:
    lines = [
        "nonterminals: " + " ".join(g.nonterminals),
        "terminals: " + " ".join(g.terminals),
        "start: " + g.start,
    ]
    for r in g.rules:
        rhs = []
        if r.word:
            rhs.append(word_to_text(r.word, g.terminals))
        if r.successor is not None:
            rhs.append(r.successor)
        if not rhs:
            rhs = ["@"]
        lines.append(f"{r.lhs} -> {' '.join(rhs)}")
    return "\n".join(lines) + "\n"


def _parse_rule_rhs(tokens: list[str], nonterminals: set[str],
                    terminals: Alphabet, line: int) -> tuple[Word, str | None]:
    successor = None
    if tokens and tokens[-1] in nonterminals:
        successor = tokens[-1]
        tokens = tokens[:-1]
    if tokens == ["@"]:
        if successor is not None:
            raise TextFormatError("'@' cannot be combined with a nonterminal", line=line)
        return EMPTY_WORD, None
    word: Word = EMPTY_WORD
    for tok in tokens:
        if tok == "@":
            raise TextFormatError("'@' must stand alone", line=line)
        try:
            word = word + word_from_text(tok, terminals)
        except Exception as e:
            raise TextFormatError(str(e), line=line) from None
    return word, successor


def parse_grammar(text: str) -> RightLinearGrammar:
    lines = [(i + 1, raw.split("#", 1)[0].strip())
             for i, raw in enumerate(text.splitlines())]
    lines = [(ln, t) for ln, t in lines if t]
    return parse_grammar_lines(lines)


def parse_grammar_lines(lines: list[tuple[int, str]]) -> RightLinearGrammar:
    """Parse from (line number, stripped text) pairs; used both directly and
    by the contextual-grammar file reader."""
    if len(lines) < 3:
        raise TextFormatError("grammar needs nonterminals/terminals/start lines",
                              line=lines[0][0] if lines else 1)
    headers = {}
    for key, (ln, text) in zip(("nonterminals", "terminals", "start"), lines[:3]):
        if not text.startswith(key + ":"):
            raise TextFormatError(f"expected '{key}:'", line=ln)
        headers[key] = (ln, text[len(key) + 1:].split())
    nts = headers["nonterminals"][1]
    if not nts:
        raise TextFormatError("empty nonterminal list", line=headers["nonterminals"][0])
    try:
        terminals = Alphabet(tuple(headers["terminals"][1]))
    except ValueError as e:
        raise TextFormatError(str(e), line=headers["terminals"][0]) from None
    if len(headers["start"][1]) != 1:
        raise TextFormatError("start line must name one nonterminal",
                              line=headers["start"][0])
    start = headers["start"][1][0]
    nt_set = set(nts)
    rules = []
    for ln, text in lines[3:]:
        if "->" not in text:
            raise TextFormatError("rule lines look like 'A -> rhs'", line=ln)
        lhs_text, rhs_text = text.split("->", 1)
        lhs = lhs_text.strip()
        if lhs not in nt_set:
            raise TextFormatError(f"unknown nonterminal {lhs!r}", line=ln)
        word, successor = _parse_rule_rhs(rhs_text.split(), nt_set, terminals, ln)
        rules.append(Rule(lhs, word, successor))
    try:
        return RightLinearGrammar(tuple(nts), terminals, tuple(rules), start)
    except InvalidGrammarError as e:
        raise TextFormatError(str(e), line=lines[0][0]) from None
