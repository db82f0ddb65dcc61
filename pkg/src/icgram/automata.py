"""Finite automata over explicit alphabets.

Two machine types:

* :class:`Nfa` — nondeterministic, epsilon-free, with a *set* of initial
  states.  Produced by the regex and grammar compilers.
* :class:`Dfa` — deterministic and always complete (the transition function
  is total; unproductive behaviour is routed through an explicit sink that is
  counted like any other state).

All constructions that output a :class:`Dfa` number states ``0..n-1`` in
breadth-first discovery order following the alphabet order, so equal
languages fed through :func:`minimize` yield structurally equal objects.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping

from .errors import AlphabetMismatchError, InvalidAutomatonError, TextFormatError
from .regex import (EmptyLang, EmptyWord, Literal, Concat, Union, Star, Regex,
                    literal_symbols, simplify_empty)
from .words import EMPTY_WORD, Alphabet, Word

State = Hashable


@dataclass(frozen=True)
class Nfa:
    """Epsilon-free NFA; ``initial`` is a set of states.

    ``transitions`` maps ``(state, symbol)`` to a frozenset of successor
    states; missing keys mean no move.
    """

    states: frozenset
    alphabet: Alphabet
    transitions: Mapping[tuple[State, str], frozenset]
    initial: frozenset
    accepting: frozenset

    def __post_init__(self):
        if not self.initial <= self.states or not self.accepting <= self.states:
            raise InvalidAutomatonError("initial/accepting states outside state set")
        for (q, a), targets in self.transitions.items():
            if q not in self.states or not targets <= self.states:
                raise InvalidAutomatonError(f"transition on unknown state: {(q, a)}")
            if a not in self.alphabet:
                raise InvalidAutomatonError(f"transition on foreign symbol {a!r}")

    def move(self, subset: frozenset, symbol: str) -> frozenset:
        out: set = set()
        for q in subset:
            out |= self.transitions.get((q, symbol), frozenset())
        return frozenset(out)


@dataclass(frozen=True)
class Dfa:
    """Complete DFA.  ``states`` is an ordered tuple; ``delta`` is total."""

    states: tuple
    alphabet: Alphabet
    delta: Mapping[tuple[State, str], State]
    initial: State
    accepting: frozenset

    def __post_init__(self):
        sset = set(self.states)
        if len(sset) != len(self.states):
            raise InvalidAutomatonError("duplicate states")
        if self.initial not in sset or not self.accepting <= sset:
            raise InvalidAutomatonError("initial/accepting states outside state set")
        for q in self.states:
            for a in self.alphabet:
                if (q, a) not in self.delta:
                    raise InvalidAutomatonError(
                        f"incomplete transition function: missing ({q!r}, {a!r})")
        for (q, a), t in self.delta.items():
            if q not in sset or t not in sset:
                raise InvalidAutomatonError(f"transition on unknown state: {(q, a)}")
            if a not in self.alphabet:
                raise InvalidAutomatonError(f"transition on foreign symbol {a!r}")

    def step(self, q: State, a: str) -> State:
        return self.delta[(q, a)]

    def run(self, w: Word, start: State | None = None) -> State:
        q = self.initial if start is None else start
        for a in w:
            if a not in self.alphabet:
                raise AlphabetMismatchError(f"symbol {a!r} not in automaton alphabet")
            q = self.delta[(q, a)]
        return q


def accepts(d: Dfa, w: Word) -> bool:
    return d.run(w) in d.accepting


# --- compilers ----------------------------------------------------------

def regex_to_nfa(r: Regex, alphabet: Alphabet) -> Nfa:
    """Position construction (one state per literal occurrence, plus a start
    state); epsilon-free by design."""
    for s in literal_symbols(r):
        if s not in alphabet:
            raise AlphabetMismatchError(f"regex literal {s!r} not in alphabet")
    r = simplify_empty(r)
    if isinstance(r, EmptyLang):
        return Nfa(frozenset(), alphabet, {}, frozenset(), frozenset())

    symbol_of: dict[int, str] = {}
    follow: dict[int, set[int]] = {}

    def walk(node: Regex) -> tuple[bool, list[int], list[int]]:
        # returns (nullable, first positions, last positions)
        if isinstance(node, EmptyWord):
            return True, [], []
        if isinstance(node, Literal):
            p = len(symbol_of) + 1
            symbol_of[p] = node.symbol
            follow[p] = set()
            return False, [p], [p]
        if isinstance(node, Star):
            nullable, first, last = walk(node.inner)
            for x in last:
                follow[x].update(first)
            return True, first, last
        if isinstance(node, Union):
            nullable, first, last = False, [], []
            for part in node.parts:
                n, f, l = walk(part)
                nullable, first, last = nullable or n, first + f, last + l
            return nullable, first, last
        assert isinstance(node, Concat)
        nullable, first, last = True, [], []
        for part in node.parts:
            n, f, l = walk(part)
            for x in last:
                follow[x].update(f)
            if nullable:
                first = first + f
            if n:
                last = last + l
            else:
                last = l
            nullable = nullable and n
        return nullable, first, last

    nullable, first, last = walk(r)
    start = 0
    states = frozenset([start]) | frozenset(symbol_of)
    transitions: dict[tuple[State, str], frozenset] = {}
    succ: dict[tuple[State, str], set] = {}
    for p in first:
        succ.setdefault((start, symbol_of[p]), set()).add(p)
    for q, targets in follow.items():
        for p in targets:
            succ.setdefault((q, symbol_of[p]), set()).add(p)
    for key, val in succ.items():
        transitions[key] = frozenset(val)
    accepting = frozenset(last) | (frozenset([start]) if nullable else frozenset())
    return Nfa(states, alphabet, transitions, frozenset([start]), accepting)


def nfa_to_dfa(n: Nfa) -> Dfa:
    """Subset construction; the empty subset acts as the sink, so the result
    is complete.  States are renumbered 0,1,... in discovery order."""
    order = list(n.alphabet)
    start = frozenset(n.initial)
    ids: dict[frozenset, int] = {start: 0}
    queue = deque([start])
    delta: dict[tuple[State, str], State] = {}
    accepting: set[int] = set()
    while queue:
        subset = queue.popleft()
        i = ids[subset]
        if subset & n.accepting:
            accepting.add(i)
        for a in order:
            target = n.move(subset, a)
            if target not in ids:
                ids[target] = len(ids)
                queue.append(target)
            delta[(i, a)] = ids[target]
    return Dfa(tuple(range(len(ids))), n.alphabet, delta, 0, frozenset(accepting))


def regex_to_dfa(r: Regex, alphabet: Alphabet) -> Dfa:
    return nfa_to_dfa(regex_to_nfa(r, alphabet))


# --- minimization and comparison ----------------------------------------

def reachable_states(d: Dfa) -> list:
    """Reachable states in breadth-first order (alphabet order)."""
    seen = {d.initial}
    out = [d.initial]
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for a in d.alphabet:
            t = d.delta[(q, a)]
            if t not in seen:
                seen.add(t)
                out.append(t)
                queue.append(t)
    return out


def minimize(d: Dfa) -> Dfa:
    """Canonical minimal DFA: unreachable states dropped, states merged by
    Moore partition refinement, then renumbered breadth-first.  Two inputs
    with the same language minimize to structurally equal objects."""
    reach = reachable_states(d)
    block: dict[State, int] = {}
    for q in reach:
        block[q] = 0 if q in d.accepting else 1
    if all(q in d.accepting for q in reach):
        block = {q: 0 for q in reach}
    if all(q not in d.accepting for q in reach):
        block = {q: 0 for q in reach}
    while True:
        signatures: dict[tuple, int] = {}
        new_block: dict[State, int] = {}
        for q in reach:
            sig = (block[q],) + tuple(block[d.delta[(q, a)]] for a in d.alphabet)
            if sig not in signatures:
                signatures[sig] = len(signatures)
            new_block[q] = signatures[sig]
        if len(signatures) == len(set(block.values())):
            break
        block = new_block
    # canonical renumber by BFS over blocks
    rep: dict[int, State] = {}
    for q in reach:
        rep.setdefault(block[q], q)
    ids = {block[d.initial]: 0}
    order = [block[d.initial]]
    queue = deque(order)
    while queue:
        b = queue.popleft()
        for a in d.alphabet:
            t = block[d.delta[(rep[b], a)]]
            if t not in ids:
                ids[t] = len(ids)
                order.append(t)
                queue.append(t)
    delta = {}
    accepting = set()
    for b in order:
        i = ids[b]
        if rep[b] in d.accepting:
            accepting.add(i)
        for a in d.alphabet:
            delta[(i, a)] = ids[block[d.delta[(rep[b], a)]]]
    return Dfa(tuple(range(len(ids))), d.alphabet, delta, 0, frozenset(accepting))


def _check_same_alphabet(d1: Dfa, d2: Dfa) -> None:
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatchError(
            f"alphabets differ: {list(d1.alphabet)} vs {list(d2.alphabet)}")


def distinguishing_word(d1: Dfa, d2: Dfa) -> Word | None:
    """Shortest word accepted by exactly one of the two automata, or None."""
    _check_same_alphabet(d1, d2)
    start = (d1.initial, d2.initial)
    parent: dict[tuple, tuple | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in d1.accepting) != (q in d2.accepting):
            w: list[str] = []
            node = pair
            while parent[node] is not None:
                node, a = parent[node]
                w.append(a)
            return tuple(reversed(w))
        for a in d1.alphabet:
            nxt = (d1.delta[(p, a)], d2.delta[(q, a)])
            if nxt not in parent:
                parent[nxt] = (pair, a)
                queue.append(nxt)
    return None


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    return distinguishing_word(d1, d2) is None


_BOOL_OPS: dict[str, Callable[[bool, bool], bool]] = {
    "union": lambda x, y: x or y,
    "intersection": lambda x, y: x and y,
    "difference": lambda x, y: x and not y,
    "symmetric_difference": lambda x, y: x != y,
}


def combine(d1: Dfa, d2: Dfa, op: str) -> Dfa:
    """Product automaton for a boolean combination (reachable part only)."""
    _check_same_alphabet(d1, d2)
    if op not in _BOOL_OPS:
        raise ValueError(f"unknown op {op!r}; use one of {sorted(_BOOL_OPS)}")
    fn = _BOOL_OPS[op]
    start = (d1.initial, d2.initial)
    ids = {start: 0}
    queue = deque([start])
    delta = {}
    accepting = set()
    while queue:
        pair = queue.popleft()
        i = ids[pair]
        p, q = pair
        if fn(p in d1.accepting, q in d2.accepting):
            accepting.add(i)
        for a in d1.alphabet:
            nxt = (d1.delta[(p, a)], d2.delta[(q, a)])
            if nxt not in ids:
                ids[nxt] = len(ids)
                queue.append(nxt)
            delta[(i, a)] = ids[nxt]
    return Dfa(tuple(range(len(ids))), d1.alphabet, delta, 0, frozenset(accepting))


def complement(d: Dfa) -> Dfa:
    return Dfa(d.states, d.alphabet, d.delta, d.initial,
               frozenset(set(d.states) - set(d.accepting)))


def inclusion_witness(d1: Dfa, d2: Dfa) -> Word | None:
    """Shortest word in L(d1) \\ L(d2), or None when L(d1) is a subset."""
    diff = combine(d1, d2, "difference")
    return shortest_accepted(diff)


# --- queries ------------------------------------------------------------

def shortest_accepted(d: Dfa) -> Word | None:
    parent: dict[State, tuple | None] = {d.initial: None}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        if q in d.accepting:
            w: list[str] = []
            node = q
            while parent[node] is not None:
                node, a = parent[node]
                w.append(a)
            return tuple(reversed(w))
        for a in d.alphabet:
            t = d.delta[(q, a)]
            if t not in parent:
                parent[t] = (q, a)
                queue.append(t)
    return None


def is_empty_lang(d: Dfa) -> bool:
    return shortest_accepted(d) is None


def access_words(d: Dfa) -> dict:
    """Shortlex-least word reaching each reachable state."""
    out: dict[State, Word] = {d.initial: EMPTY_WORD}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for a in d.alphabet:
            t = d.delta[(q, a)]
            if t not in out:
                out[t] = out[q] + (a,)
                queue.append(t)
    return out


def distinguishing_suffix(d: Dfa, p: State, q: State) -> Word | None:
    """Shortest word accepted from exactly one of two states of ``d``."""
    start = (p, q)
    parent: dict[tuple, tuple | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        x, y = pair
        if (x in d.accepting) != (y in d.accepting):
            w: list[str] = []
            node = pair
            while parent[node] is not None:
                node, a = parent[node]
                w.append(a)
            return tuple(reversed(w))
        for a in d.alphabet:
            nxt = (d.delta[(x, a)], d.delta[(y, a)])
            if nxt not in parent:
                parent[nxt] = (pair, a)
                queue.append(nxt)
    return None


def _distance_to_accepting(d: Dfa) -> dict:
    """Shortest suffix length from each state into an accepting state."""
    dist: dict[State, int] = {q: 0 for q in d.accepting}
    queue = deque(d.accepting)
    back: dict[State, list] = {q: [] for q in d.states}
    for (q, a), t in d.delta.items():
        back[t].append(q)
    while queue:
        t = queue.popleft()
        for q in back[t]:
            if q not in dist:
                dist[q] = dist[t] + 1
                queue.append(q)
    return dist


def enumerate_regular(d: Dfa, max_len: int) -> set[Word]:
    """All accepted words of length <= max_len (pruned breadth-first walk)."""
    dist = _distance_to_accepting(d)
    out: set[Word] = set()
    if d.initial not in dist:
        return out
    layer: list[tuple[State, Word]] = [(d.initial, EMPTY_WORD)]
    for length in range(max_len + 1):
        nxt: list[tuple[State, Word]] = []
        for q, w in layer:
            if q in d.accepting:
                out.add(w)
            if length == max_len:
                continue
            for a in d.alphabet:
                t = d.delta[(q, a)]
                if t in dist and dist[t] <= max_len - length - 1:
                    nxt.append((t, w + (a,)))
        layer = nxt
    return out


def language_is_finite(d: Dfa) -> bool:
    """True when no cycle lies on an accepting path."""
    dist = _distance_to_accepting(d)
    useful = [q for q in reachable_states(d) if q in dist]
    useful_set = set(useful)
    color: dict[State, int] = {}

    def dfs(q: State) -> bool:  # returns True when a cycle is found
        color[q] = 1
        for a in d.alphabet:
            t = d.delta[(q, a)]
            if t not in useful_set:
                continue
            c = color.get(t, 0)
            if c == 1:
                return True
            if c == 0 and dfs(t):
                return True
        color[q] = 2
        return False

    return not any(dfs(q) for q in useful if color.get(q, 0) == 0)


# --- simple builders ----------------------------------------------------

def universal_dfa(alphabet: Alphabet) -> Dfa:
    delta = {(0, a): 0 for a in alphabet}
    return Dfa((0,), alphabet, delta, 0, frozenset([0]))


def empty_dfa(alphabet: Alphabet) -> Dfa:
    delta = {(0, a): 0 for a in alphabet}
    return Dfa((0,), alphabet, delta, 0, frozenset())


def word_set_dfa(words: Iterable[Word], alphabet: Alphabet) -> Dfa:
    """Trie acceptor (plus sink) for a finite set of words."""
    words = list(words)
    for w in words:
        alphabet.check_word(w)
    prefixes: dict[Word, int] = {EMPTY_WORD: 0}
    for w in sorted(words):
        for i in range(1, len(w) + 1):
            if w[:i] not in prefixes:
                prefixes[w[:i]] = len(prefixes)
    sink = len(prefixes)
    delta = {}
    for p, i in prefixes.items():
        for a in alphabet:
            delta[(i, a)] = prefixes.get(p + (a,), sink)
    for a in alphabet:
        delta[(sink, a)] = sink
    accepting = frozenset(prefixes[w] for w in words)
    return Dfa(tuple(range(sink + 1)), alphabet, delta, 0, accepting)


def ends_with_dfa(alphabet: Alphabet, final_symbols: Iterable[str]) -> Dfa:
    """Words whose last symbol lies in ``final_symbols`` (state = last symbol
    class; this is the shape of every 2-state language of that kind)."""
    fin = set(final_symbols)
    for s in fin:
        if s not in alphabet:
            raise AlphabetMismatchError(f"symbol {s!r} not in alphabet")
    delta = {}
    for q in (0, 1):
        for a in alphabet:
            delta[(q, a)] = 1 if a in fin else 0
    return Dfa((0, 1), alphabet, delta, 0, frozenset([1]))


# --- transition table text form -----------------------------------------

def dfa_to_table(d: Dfa) -> str:
    """Serialize as a transition table; inverse of :func:`parse_dfa_table`."""
    if all(isinstance(q, str) for q in d.states):
        name = {q: q for q in d.states}
    elif all(isinstance(q, int) for q in d.states):
        name = {q: f"q{q}" for q in d.states}
    else:
        name = {q: f"s{i}" for i, q in enumerate(d.states)}
    lines = [
        "states: " + " ".join(name[q] for q in d.states),
        "alphabet: " + " ".join(d.alphabet),
        "initial: " + name[d.initial],
        "accepting: " + " ".join(name[q] for q in d.states if q in d.accepting),
    ]
    for q in d.states:
        for a in d.alphabet:
            lines.append(f"{name[q]} {a} {name[d.delta[(q, a)]]}")
    return "\n".join(lines) + "\n"


def _parse_dfa_lines(lines: list[tuple[int, str]]) -> Dfa:
    """Parse table lines given as (1-based line number, stripped text)."""

    def split_header(idx: int, key: str) -> tuple[int, list[str]]:
        if idx >= len(lines):
            raise TextFormatError(f"missing '{key}:' line",
                                  line=lines[-1][0] if lines else 1)
        ln, text = lines[idx]
        if not text.startswith(key + ":"):
            raise TextFormatError(f"expected '{key}:'", line=ln)
        return ln, text[len(key) + 1:].split()

    _, state_names = split_header(0, "states")
    if not state_names:
        raise TextFormatError("empty state list", line=lines[0][0])
    ln_a, sym_names = split_header(1, "alphabet")
    try:
        alphabet = Alphabet(tuple(sym_names))
    except ValueError as e:
        raise TextFormatError(str(e), line=ln_a) from None
    ln_i, initial = split_header(2, "initial")
    if len(initial) != 1 or initial[0] not in state_names:
        raise TextFormatError("initial must name exactly one known state", line=ln_i)
    ln_f, accepting = split_header(3, "accepting")
    for q in accepting:
        if q not in state_names:
            raise TextFormatError(f"unknown accepting state {q!r}", line=ln_f)
    delta: dict[tuple[State, str], State] = {}
    for ln, text in lines[4:]:
        parts = text.split()
        if len(parts) != 3:
            raise TextFormatError("transition rows are 'state symbol state'", line=ln)
        q, a, t = parts
        if q not in state_names:
            raise TextFormatError(f"unknown state {q!r}", line=ln)
        if a not in alphabet:
            raise TextFormatError(f"unknown symbol {a!r}", line=ln)
        if t not in state_names:
            raise TextFormatError(f"unknown state {t!r}", line=ln)
        if (q, a) in delta:
            raise TextFormatError(f"duplicate transition for ({q}, {a})", line=ln)
        delta[(q, a)] = t
    try:
        return Dfa(tuple(state_names), alphabet, delta, initial[0], frozenset(accepting))
    except InvalidAutomatonError as e:
        raise TextFormatError(str(e), line=lines[0][0]) from None


def parse_dfa_table(text: str) -> Dfa:
    lines = [(i + 1, raw.split("#", 1)[0].strip())
             for i, raw in enumerate(text.splitlines())]
    lines = [(ln, t) for ln, t in lines if t]
    if not lines:
        raise TextFormatError("empty automaton description")
    return _parse_dfa_lines(lines)
