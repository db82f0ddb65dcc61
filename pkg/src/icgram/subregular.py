"""Decision procedures for structural subregular families.

Every predicate takes a complete DFA ``d`` together with the alphabet ``U``
it is declared over (``d.alphabet`` must equal ``U``), minimizes internally,
and decides by structural analysis — no language is ever enumerated.  Each
negative answer is backed by checkable evidence: a word or pair of words
whose membership pattern refutes the family property.

The ordered family is special: it asks for *some* accepting automaton whose
states carry a letter-monotone total order, and that automaton may need
more states than the minimal one (every finite language is ordered, yet
already {a b} has an unorderable minimal automaton).  The check here is
three-valued — yes with an explicit order or a definite bound, no with a
repetition witness, unknown in the remaining gap.

:func:`classify` runs all families at once and cross-validates the verdicts
against the known inclusions between families; a violation raises
:class:`InternalConsistencyError` because it can only mean a bug in one of
the deciders.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .automata import (Dfa, access_words, complement, distinguishing_suffix,
                       distinguishing_word, ends_with_dfa, inclusion_witness,
                       language_is_finite, minimize, reachable_states,
                       shortest_accepted, _distance_to_accepting)
from .errors import (AlphabetMismatchError, InternalConsistencyError,
                     ResourceLimitError, TextFormatError, UndecidedError)
from .monoid import DEFAULT_MONOID_CAP, monoid_closure_arrays
from .regex import Regex, is_union_free_syntax
from .words import Alphabet, Word, word_to_text


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


_PLAIN_KINDS = ("MON", "FIN", "NIL", "COMB", "DEF", "SUF", "ORD",
                "COMM", "CIRC", "NC", "PS", "UF", "REG")
_PARAM_KINDS = ("RL_V", "RL_P", "REG_Z")


@dataclass(frozen=True)
class FamilyLabel:
    """A family name, optionally with a resource bound: ``MON``, ``RL_V(2)``."""

    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind in _PLAIN_KINDS:
            if self.n is not None:
                raise ValueError(f"{self.kind} takes no parameter")
        elif self.kind in _PARAM_KINDS:
            if self.n is None or self.n < 1:
                raise ValueError(f"{self.kind} needs a bound >= 1")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    def __str__(self) -> str:
        return self.kind if self.n is None else f"{self.kind}({self.n})"

    @property
    def structural(self) -> bool:
        return self.kind in _PLAIN_KINDS and self.kind != "REG"


MON = FamilyLabel("MON")
FIN = FamilyLabel("FIN")
NIL = FamilyLabel("NIL")
COMB = FamilyLabel("COMB")
DEF = FamilyLabel("DEF")
SUF = FamilyLabel("SUF")
ORD = FamilyLabel("ORD")
COMM = FamilyLabel("COMM")
CIRC = FamilyLabel("CIRC")
NC = FamilyLabel("NC")
PS = FamilyLabel("PS")
UF = FamilyLabel("UF")
REG = FamilyLabel("REG")


def rl_v(n: int) -> FamilyLabel:
    return FamilyLabel("RL_V", n)


def rl_p(n: int) -> FamilyLabel:
    return FamilyLabel("RL_P", n)


def reg_z(n: int) -> FamilyLabel:
    return FamilyLabel("REG_Z", n)


FAMILY_ORDER = (MON, FIN, NIL, COMB, DEF, SUF, ORD, COMM, CIRC, NC, PS, UF, REG)


def parse_family_label(text: str) -> FamilyLabel:
    text = text.strip()
    if "(" in text:
        kind, _, rest = text.partition("(")
        if not rest.endswith(")"):
            raise TextFormatError(f"malformed family label {text!r}")
        try:
            n = int(rest[:-1])
        except ValueError:
            raise TextFormatError(f"malformed family bound in {text!r}") from None
        try:
            return FamilyLabel(kind.strip(), n)
        except ValueError as e:
            raise TextFormatError(str(e)) from None
    try:
        return FamilyLabel(text)
    except ValueError as e:
        raise TextFormatError(str(e)) from None


def label_sort_key(label: FamilyLabel) -> tuple:
    kinds = _PLAIN_KINDS + _PARAM_KINDS
    return (kinds.index(label.kind), label.n or 0)


@dataclass(frozen=True)
class Evidence:
    """Human-readable reason plus words whose membership backs the verdict."""

    note: str = ""
    words: tuple[Word, ...] = ()


# Inclusions between structural families: (X, Y) reads "every X language is
# a Y language".  classify() enforces these on its own verdicts.
STRUCTURAL_IMPLICATIONS: tuple[tuple[FamilyLabel, FamilyLabel], ...] = (
    (MON, NIL), (MON, SUF), (MON, COMM),
    (FIN, NIL),
    (NIL, DEF),
    (COMB, DEF),
    (DEF, ORD),
    (ORD, NC),
    (NC, PS),
    (SUF, PS),
    (COMM, CIRC),
)


def _require_alphabet(d: Dfa, U: Alphabet) -> None:
    if d.alphabet != U:
        raise AlphabetMismatchError(
            f"automaton alphabet {list(d.alphabet)} differs from declared {list(U)}")


# --- individual checkers (all take a minimal DFA) ------------------------

def _check_monoidal(dm: Dfa) -> tuple[bool, Evidence]:
    if len(dm.states) == 1 and dm.initial in dm.accepting:
        return True, Evidence("the full language over the alphabet")
    w = shortest_accepted(complement(dm))
    assert w is not None
    return False, Evidence("a word is rejected", (w,))


def _useful_states(dm: Dfa) -> set:
    dist = _distance_to_accepting(dm)
    return {q for q in reachable_states(dm) if q in dist}


def _pump_words(dm: Dfa) -> tuple[Word, Word, Word]:
    """(x, y, z) with x y^k z accepted for every k >= 0 and y non-empty.
    Only valid when the language is infinite."""
    useful = _useful_states(dm)
    acc = access_words(dm)
    for q in sorted(useful, key=lambda s: len(acc[s])):
        # shortest non-empty loop at q through useful states
        parent: dict = {}
        queue = deque()
        for a in dm.alphabet:
            t = dm.delta[(q, a)]
            if t in useful and t not in parent:
                parent[t] = (None, a)
                queue.append(t)
        found = None
        if q in parent:
            found = q
        while queue and found is None:
            s = queue.popleft()
            for a in dm.alphabet:
                t = dm.delta[(s, a)]
                if t not in useful:
                    continue
                if t == q:
                    parent[q] = (s, a)
                    found = q
                    break
                if t not in parent:
                    parent[t] = (s, a)
                    queue.append(t)
        if found is None:
            continue
        y: list[str] = []
        node = q
        while True:
            prev, a = parent[node]
            y.append(a)
            if prev is None:
                break
            node = prev
        y_word = tuple(reversed(y))
        # shortest completion q -> accepting
        zparent: dict = {q: None}
        zq = deque([q])
        z_word: Word | None = None
        while zq:
            s = zq.popleft()
            if s in dm.accepting:
                z: list[str] = []
                node = s
                while zparent[node] is not None:
                    node, a = zparent[node]
                    z.append(a)
                z_word = tuple(reversed(z))
                break
            for a in dm.alphabet:
                t = dm.delta[(s, a)]
                if t not in zparent:
                    zparent[t] = (s, a)
                    zq.append(t)
        assert z_word is not None
        return acc[q], y_word, z_word
    raise AssertionError("no pumpable state in an infinite language")


def _check_finite(dm: Dfa) -> tuple[bool, Evidence]:
    if language_is_finite(dm):
        useful = _useful_states(dm)
        memo: dict = {}

        def longest(q) -> int:
            if q in memo:
                return memo[q]
            best = 0 if q in dm.accepting else -1
            for a in dm.alphabet:
                t = dm.delta[(q, a)]
                if t in useful:
                    sub = longest(t)
                    if sub >= 0:
                        best = max(best, 1 + sub)
            memo[q] = best
            return best

        m = longest(dm.initial) if dm.initial in useful else -1
        if m < 0:
            return True, Evidence("the empty language")
        return True, Evidence(f"finite; longest word has length {m}")
    x, y, z = _pump_words(dm)
    return False, Evidence("infinite: the first word pumps to the second",
                           (x + y + z, x + y + y + z))


def _check_nilpotent(dm: Dfa) -> tuple[bool, Evidence]:
    fin, ev = _check_finite(dm)
    if fin:
        return True, Evidence("finite language; " + ev.note)
    cdm = minimize(complement(dm))
    cofin, _ = _check_finite(cdm)
    if cofin:
        return True, Evidence("cofinite language")
    xi, yi, zi = _pump_words(dm)
    xo, yo, zo = _pump_words(cdm)
    return False, Evidence(
        "both the language (first word, accepted) and its complement "
        "(second word, rejected) are infinite",
        (xi + yi + zi, xo + yo + zo))


def _check_combinational(dm: Dfa) -> tuple[bool, Evidence]:
    choice = tuple(a for a in dm.alphabet if dm.run((a,)) in dm.accepting)
    target = ends_with_dfa(dm.alphabet, choice)
    w = distinguishing_word(dm, target)
    if w is None:
        shown = " ".join(choice) if choice else "(none)"
        return True, Evidence(f"exactly the words ending in: {shown}")
    side = "accepted" if dm.run(w) in dm.accepting else "rejected"
    return False, Evidence(
        f"membership is not a function of the final symbol ({side} witness)", (w,))


def _suffix_pair_fixpoint(dm: Dfa) -> tuple[set, int | None]:
    """Iterate the state-pair image map to its fixpoint.

    Returns the set of pairs that survive arbitrarily long common suffixes,
    plus the first iteration count at which no surviving pair mixed an
    accepting with a rejecting state (``None`` if that never happens — the
    two are equivalent at the fixpoint, but the count is the suffix bound).
    """
    states = list(dm.states)
    pairs = {frozenset((p, q)) for i, p in enumerate(states)
             for q in states[i + 1:]}

    def mixed(pair_set) -> frozenset | None:
        for pair in sorted(pair_set, key=lambda s: sorted(map(str, s))):
            p, q = sorted(pair, key=str)
            if (p in dm.accepting) != (q in dm.accepting):
                return pair
        return None

    def step(pair_set) -> set:
        out = set()
        for pair in pair_set:
            p, q = tuple(pair)
            for a in dm.alphabet:
                tp, tq = dm.delta[(p, a)], dm.delta[(q, a)]
                if tp != tq:
                    out.add(frozenset((tp, tq)))
        return out

    current = pairs
    clean_at = 0 if mixed(current) is None else None
    t = 0
    while True:
        nxt = step(current)
        if nxt == current:
            break
        current = nxt
        t += 1
        if clean_at is None and mixed(current) is None:
            clean_at = t
    return current, clean_at


def _definite_bound(dm: Dfa) -> int | None:
    """Suffix length that settles membership, or None if no bound exists."""
    current, clean_at = _suffix_pair_fixpoint(dm)
    for pair in current:
        p, q = tuple(pair)
        if (p in dm.accepting) != (q in dm.accepting):
            return None
    return clean_at if clean_at is not None else 0


def _check_definite(dm: Dfa) -> tuple[bool, Evidence]:
    states = list(dm.states)

    def bad(pair_set) -> frozenset | None:
        for pair in sorted(pair_set, key=lambda s: sorted(map(str, s))):
            p, q = sorted(pair, key=str)
            if (p in dm.accepting) != (q in dm.accepting):
                return pair
        return None

    current, clean_at = _suffix_pair_fixpoint(dm)
    bad_pair = bad(current)
    if bad_pair is None:
        assert clean_at is not None
        return True, Evidence(f"membership depends only on the last {clean_at} symbols")
    # reconstruct two words with a long shared suffix but different membership
    rev: dict[frozenset, tuple[frozenset, str]] = {}
    for pair in sorted(current, key=lambda s: sorted(map(str, s))):
        p, q = sorted(pair, key=str)
        for a in dm.alphabet:
            tp, tq = dm.delta[(p, a)], dm.delta[(q, a)]
            if tp != tq:
                img = frozenset((tp, tq))
                if img in current and img not in rev:
                    rev[img] = (pair, a)
    suffix: list[str] = []
    cur = bad_pair
    for _ in range(len(states) ** 2 + len(states)):
        cur, a = rev[cur]
        suffix.append(a)
    z = tuple(reversed(suffix))
    acc = access_words(dm)
    p, q = sorted(cur, key=str)
    return False, Evidence(
        f"membership still differs after a shared suffix of length {len(z)}",
        (acc[p] + z, acc[q] + z))


def _check_suffix_closed(dm: Dfa) -> tuple[bool, Evidence]:
    acc = access_words(dm)
    for q in dm.states:
        from_q = Dfa(dm.states, dm.alphabet, dm.delta, q, dm.accepting)
        y = inclusion_witness(from_q, dm)
        if y is not None:
            return False, Evidence(
                "the first word is accepted but its suffix (second word) is not",
                (acc[q] + y, y))
    return True, Evidence("every suffix of every accepted word is accepted")


_ORDER_SEARCH_CAP = 500_000


def _search_monotone_order(dm: Dfa) -> list | None:
    """Total order on the states making every letter monotone, or None.

    Constraint propagation plus backtracking over the remaining free pairs;
    raises :class:`ResourceLimitError` if the search tree outgrows its cap.
    """
    states = list(dm.states)
    n = len(states)
    if n == 1:
        return states
    visited = 0

    def propagate(le: frozenset) -> frozenset | None:
        rel = set(le)
        queue = deque(le)
        while queue:
            p, q = queue.popleft()
            if (q, p) in rel:
                return None
            fresh = []
            for a in dm.alphabet:
                tp, tq = dm.delta[(p, a)], dm.delta[(q, a)]
                if tp != tq and (tp, tq) not in rel:
                    fresh.append((tp, tq))
            for x, y in list(rel):
                if y == p and x != q and (x, q) not in rel:
                    fresh.append((x, q))
                if x == q and y != p and (p, y) not in rel:
                    fresh.append((p, y))
            for e in fresh:
                if e not in rel:
                    rel.add(e)
                    queue.append(e)
        for p, q in rel:
            if (q, p) in rel:
                return None
        return frozenset(rel)

    def unresolved(rel: frozenset) -> tuple | None:
        for i, p in enumerate(states):
            for q in states[i + 1:]:
                if (p, q) not in rel and (q, p) not in rel:
                    return (p, q)
        return None

    def search(rel: frozenset) -> frozenset | None:
        nonlocal visited
        visited += 1
        if visited > _ORDER_SEARCH_CAP:
            raise ResourceLimitError("state-order search exceeded its cap",
                                     cap=_ORDER_SEARCH_CAP, reached=visited)
        pick = unresolved(rel)
        if pick is None:
            return rel
        p, q = pick
        for cand in ((p, q), (q, p)):
            nxt = propagate(rel | {cand})
            if nxt is not None:
                result = search(nxt)
                if result is not None:
                    return result
        return None

    base = propagate(frozenset())
    result = search(base) if base is not None else None
    if result is None:
        return None
    below = {q: sum(1 for e in result if e[1] == q) for q in states}
    return sorted(states, key=lambda q: (below[q], str(q)))


def _check_ordered(dm: Dfa, monoid_cap: int = DEFAULT_MONOID_CAP, *,
                   noncounting: tuple[Verdict, Evidence] | None = None
                   ) -> tuple[Verdict, Evidence]:
    """Three-valued check for acceptance by some order-monotone automaton.

    The defining automaton is existentially quantified, so the minimal one
    not being orderable settles nothing by itself.  Decided cases:

    * the minimal automaton admits a monotone total order — yes;
    * membership depends only on the last ``k`` symbols — yes: the automaton
      whose states are end-padded windows of the last ``k`` symbols accepts
      the language and is monotone when its states are ranked by the
      reversed window (appending a symbol maps every window ``x`` to
      ``s + x[:k-1]``, which preserves any lexicographic ranking);
    * membership distinguishes some repetition count — no: every word of a
      monotone automaton acts as a monotone map on the state chain, whose
      iterates stabilize instead of cycling.

    Aperiodic, non-definite languages whose minimal automaton is not
    orderable fall outside all three criteria and come back unknown.
    ``noncounting`` may carry an already-computed repetition verdict to
    avoid rebuilding the transition monoid.
    """
    order_capped = False
    chain = None
    try:
        chain = _search_monotone_order(dm)
    except ResourceLimitError:
        order_capped = True
    if chain is not None:
        return Verdict.YES, Evidence(
            "monotone state order: " + " < ".join(str(q) for q in chain))
    k = _definite_bound(dm)
    if k is not None:
        return Verdict.YES, Evidence(
            f"the minimal automaton admits no monotone order, but membership "
            f"depends only on the last {k} symbols and the last-{k}-symbols "
            f"automaton does")
    if noncounting is None:
        nc_ok, nc_ev = _check_noncounting(dm, monoid_cap)
        noncounting = (Verdict.YES if nc_ok else Verdict.NO, nc_ev)
    nc_verdict, nc_ev = noncounting
    if nc_verdict is Verdict.NO:
        return Verdict.NO, Evidence(
            "monotone maps of a finite chain cannot count repetitions: "
            + nc_ev.note, nc_ev.words)
    how = ("the state-order search hit its cap" if order_capped else
           "the minimal automaton admits no monotone order")
    if nc_verdict is Verdict.UNKNOWN:
        return Verdict.UNKNOWN, Evidence(
            how + "; the repetition check hit the monoid cap, leaving "
            "orderability undecided at this cap")
    return Verdict.UNKNOWN, Evidence(
        how + "; the language is neither definite nor repetition-counting, "
        "and orderability of a larger accepting automaton is not decided here")


def _check_commutative(dm: Dfa) -> tuple[bool, Evidence]:
    acc = access_words(dm)
    letters = list(dm.alphabet)
    for q in dm.states:
        for i, a in enumerate(letters):
            for b in letters[i + 1:]:
                s1 = dm.delta[(dm.delta[(q, a)], b)]
                s2 = dm.delta[(dm.delta[(q, b)], a)]
                if s1 != s2:
                    z = distinguishing_suffix(dm, s1, s2)
                    assert z is not None  # distinct states of a minimal DFA
                    x = acc[q]
                    return False, Evidence(
                        "the two words permute each other but only one is accepted",
                        (x + (a, b) + z, x + (b, a) + z))
    return True, Evidence("membership is invariant under reordering of symbols")


def _pair_reach(dm: Dfa, start: tuple) -> dict:
    parent: dict[tuple, tuple | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        for a in dm.alphabet:
            nxt = (dm.delta[(p, a)], dm.delta[(q, a)])
            if nxt not in parent:
                parent[nxt] = (pair, a)
                queue.append(nxt)
    return parent


def _walk_word(parent: dict, pair: tuple) -> Word:
    out: list[str] = []
    while parent[pair] is not None:
        pair, a = parent[pair]
        out.append(a)
    return tuple(reversed(out))


def _check_circular(dm: Dfa) -> tuple[bool, Evidence]:
    q0 = dm.initial
    back: dict = {}
    for q in dm.states:
        fwd = _pair_reach(dm, (q, q0))
        for (a, b) in sorted(fwd, key=lambda pr: (str(pr[0]), str(pr[1]))):
            if a not in dm.accepting:
                continue
            if b not in back:
                back[b] = _pair_reach(dm, (q0, b))
            for (c, dd) in sorted(back[b], key=lambda pr: (str(pr[0]), str(pr[1]))):
                if c == q and dd not in dm.accepting:
                    v = _walk_word(fwd, (a, b))
                    u = _walk_word(back[b], (c, dd))
                    return False, Evidence(
                        "the second word is a rotation of the first (accepted) one",
                        (u + v, v + u))
    return True, Evidence("closed under cyclic shifts")


def _power_rows(rows: np.ndarray, times: int) -> np.ndarray:
    """Square each row-transformation ``times`` times: t -> t^(2^times)."""
    out = rows
    for _ in range(times):
        out = np.take_along_axis(out, out, axis=1)
    return out


def _check_noncounting(dm: Dfa, cap: int) -> tuple[bool, Evidence]:
    rows, words = monoid_closure_arrays(dm, cap)
    m = len(rows)
    k = max(1, int(np.ceil(np.log2(m + 1))))
    stable = _power_rows(rows, k)           # t^(2^k), beyond every pre-period
    bumped = np.take_along_axis(rows, stable, axis=1)  # t^(2^k + 1)
    diff = np.nonzero((stable != bumped).any(axis=1))[0]
    if len(diff) == 0:
        return True, Evidence(f"aperiodic transition monoid ({m} elements)")
    i = int(diff[0])
    t = tuple(int(x) for x in rows[i])
    y = words[i]
    # pre-period of the power sequence t, t^2, ...
    seen: dict[tuple, int] = {}
    cur, e = t, 1
    while cur not in seen:
        seen[cur] = e
        cur = tuple(t[x] for x in cur)
        e += 1
    k0 = seen[cur]  # first exponent on the cycle
    exp = k0
    p_k = cur                        # t^{k0}
    p_k1 = tuple(t[x] for x in cur)  # t^{k0 + 1}
    assert p_k != p_k1  # this element's cycle has period >= 2
    state_list = list(dm.states)
    s = next(j for j in range(len(state_list)) if p_k[j] != p_k1[j])
    acc = access_words(dm)
    x = acc[state_list[s]]
    z = distinguishing_suffix(dm, state_list[p_k[s]], state_list[p_k1[s]])
    assert z is not None
    return False, Evidence(
        f"membership depends on the number of repetitions of "
        f"{word_to_text(y, dm.alphabet)} (exponents {exp} vs {exp + 1})",
        (x + y * exp + z, x + y * (exp + 1) + z))


def _check_power_separating(dm: Dfa, cap: int) -> tuple[bool, Evidence]:
    rows, words = monoid_closure_arrays(dm, cap)
    m, n = rows.shape
    q0 = list(dm.states).index(dm.initial)
    acc_mask = np.array([q in dm.accepting for q in dm.states])
    idx = np.arange(m)
    v = rows[:, q0]                      # state after x^1
    states_seq = [v]
    for _ in range(2 * n + 1):
        v = rows[idx, v]
        states_seq.append(v)
    seq = np.stack(states_seq, axis=1)   # (m, 2n+2): exponents 1..2n+2
    window = seq[:, n:]                  # exponents n+1 .. 2n+2, all on cycle
    acc_win = acc_mask[window]
    mixed = np.nonzero(acc_win.any(axis=1) & ~acc_win.all(axis=1))[0]
    if len(mixed) == 0:
        return True, Evidence(
            "high powers of every word are uniformly inside or outside")
    i = int(mixed[0])
    y = words[i]
    row = acc_win[i]
    j_in = int(np.nonzero(row)[0][0]) + n + 1
    j_out = int(np.nonzero(~row)[0][0]) + n + 1
    return False, Evidence(
        f"arbitrarily high powers of {word_to_text(y, dm.alphabet)} fall on "
        f"both sides (exponents {j_in} vs {j_out}, repeating)",
        (y * j_in, y * j_out))


# --- public predicates ----------------------------------------------------

def is_monoidal(d: Dfa, U: Alphabet) -> bool:
    _require_alphabet(d, U)
    return _check_monoidal(minimize(d))[0]


def is_finite(d: Dfa, U: Alphabet) -> bool:
    _require_alphabet(d, U)
    return _check_finite(minimize(d))[0]


def is_nilpotent(d: Dfa, U: Alphabet) -> bool:
    _require_alphabet(d, U)
    return _check_nilpotent(minimize(d))[0]


def is_combinational(d: Dfa, U: Alphabet) -> bool:
    _require_alphabet(d, U)
    return _check_combinational(minimize(d))[0]


def is_definite(d: Dfa, U: Alphabet) -> bool:
    _require_alphabet(d, U)
    return _check_definite(minimize(d))[0]


def is_suffix_closed(d: Dfa, U: Alphabet) -> bool:
    _require_alphabet(d, U)
    return _check_suffix_closed(minimize(d))[0]


def is_ordered(d: Dfa, U: Alphabet, *,
               monoid_cap: int = DEFAULT_MONOID_CAP) -> bool:
    """True/False when decidable; raises :class:`UndecidedError` otherwise.

    See :func:`classify` for the three-valued form with evidence; the gap
    (aperiodic, not definite, minimal automaton unorderable) is inherent in
    the family's definition quantifying over *some* accepting automaton.
    """
    _require_alphabet(d, U)
    v, ev = _check_ordered(minimize(d), monoid_cap)
    if v is Verdict.UNKNOWN:
        raise UndecidedError(ev.note)
    return v is Verdict.YES


def is_commutative(d: Dfa, U: Alphabet) -> bool:
    _require_alphabet(d, U)
    return _check_commutative(minimize(d))[0]


def is_circular(d: Dfa, U: Alphabet) -> bool:
    _require_alphabet(d, U)
    return _check_circular(minimize(d))[0]


def is_noncounting(d: Dfa, U: Alphabet, *, monoid_cap: int = DEFAULT_MONOID_CAP) -> bool:
    _require_alphabet(d, U)
    return _check_noncounting(minimize(d), monoid_cap)[0]


def is_power_separating(d: Dfa, U: Alphabet, *,
                        monoid_cap: int = DEFAULT_MONOID_CAP) -> bool:
    _require_alphabet(d, U)
    return _check_power_separating(minimize(d), monoid_cap)[0]


def union_free_syntax(r: Regex) -> Verdict:
    """Syntactic semi-decision: YES when the expression uses no union (and no
    empty-language constant); UNKNOWN otherwise — the language may still have
    a union-free expression."""
    return Verdict.YES if is_union_free_syntax(r) else Verdict.UNKNOWN


# --- combined classification ---------------------------------------------

@dataclass
class FamilyReport:
    """Verdict per family, with evidence, for one regular language."""

    language: str
    alphabet: Alphabet
    min_state_count: int
    verdicts: dict = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)

    def verdict(self, label: FamilyLabel) -> Verdict:
        return self.verdicts[label]

    def to_text(self) -> str:
        lines = [f"language: {self.language}",
                 "alphabet: " + " ".join(self.alphabet),
                 f"min-states: {self.min_state_count}"]
        for label in FAMILY_ORDER:
            v = self.verdicts[label]
            ev = self.evidence.get(label)
            line = f"{label}: {v}"
            if ev and (ev.note or ev.words):
                parts = [ev.note] if ev.note else []
                if ev.words:
                    parts.append("witness: " + ", ".join(
                        word_to_text(w, self.alphabet) for w in ev.words))
                line += "  # " + "; ".join(parts)
            lines.append(line)
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        families = []
        for label in FAMILY_ORDER:
            ev = self.evidence.get(label)
            families.append({
                "family": str(label),
                "verdict": str(self.verdicts[label]),
                "note": ev.note if ev else "",
                "witnesses": [word_to_text(w, self.alphabet)
                              for w in (ev.words if ev else ())],
            })
        return {
            "language": self.language,
            "alphabet": list(self.alphabet),
            "min_states": self.min_state_count,
            "families": families,
        }


def classify(d: Dfa, U: Alphabet, *, source_regex: Regex | None = None,
             language_name: str = "", monoid_cap: int = DEFAULT_MONOID_CAP
             ) -> FamilyReport:
    """Decide all families at once and cross-check the verdicts.

    The two monoid-based families come back UNKNOWN when the monoid cap is
    hit; everything else is always decided.
    """
    _require_alphabet(d, U)
    dm = minimize(d)
    report = FamilyReport(language=language_name or "(unnamed)", alphabet=U,
                          min_state_count=len(dm.states))

    checks = [
        (MON, _check_monoidal),
        (FIN, _check_finite),
        (NIL, _check_nilpotent),
        (COMB, _check_combinational),
        (DEF, _check_definite),
        (SUF, _check_suffix_closed),
        (COMM, _check_commutative),
        (CIRC, _check_circular),
    ]
    for label, fn in checks:
        try:
            ok, ev = fn(dm)
            report.verdicts[label] = Verdict.YES if ok else Verdict.NO
            report.evidence[label] = ev
        except ResourceLimitError as e:
            report.verdicts[label] = Verdict.UNKNOWN
            report.evidence[label] = Evidence(f"search cap hit: {e}")
    for label, fn2 in ((NC, _check_noncounting), (PS, _check_power_separating)):
        try:
            ok, ev = fn2(dm, monoid_cap)
            report.verdicts[label] = Verdict.YES if ok else Verdict.NO
            report.evidence[label] = ev
        except ResourceLimitError as e:
            report.verdicts[label] = Verdict.UNKNOWN
            report.evidence[label] = Evidence(
                f"monoid cap exceeded (cap {e.cap}); undecided at this cap")
    # ordered reuses the repetition verdict: its only off-chain certificates
    # are the definite bound (yes) and a repetition witness (no)
    v, ev = _check_ordered(dm, monoid_cap,
                           noncounting=(report.verdicts[NC],
                                        report.evidence[NC]))
    report.verdicts[ORD] = v
    report.evidence[ORD] = ev
    if source_regex is not None:
        v = union_free_syntax(source_regex)
        note = ("the given expression is union-free" if v is Verdict.YES else
                "given expression uses union; no union-free form was searched for")
        report.verdicts[UF] = v
        report.evidence[UF] = Evidence(note)
    else:
        report.verdicts[UF] = Verdict.UNKNOWN
        report.evidence[UF] = Evidence("no expression given; syntactic check only")
    report.verdicts[REG] = Verdict.YES
    report.evidence[REG] = Evidence("regular by construction")

    _cross_validate(report)
    return report


def _cross_validate(report: FamilyReport) -> None:
    v = report.verdicts
    for x, y in STRUCTURAL_IMPLICATIONS:
        if v[x] is Verdict.YES and v[y] is Verdict.NO:
            raise InternalConsistencyError(
                f"{x} holds but {y} does not for {report.language}: "
                "violates a known inclusion")
    if v[MON] is Verdict.YES and report.min_state_count != 1:
        raise InternalConsistencyError("full language with more than one state")
    if v[COMB] is Verdict.YES and report.min_state_count > 2:
        raise InternalConsistencyError(
            "final-symbol language needs more than two states")
    if report.min_state_count == 1:
        for label in (NIL, SUF, COMM, CIRC):
            if v[label] is Verdict.NO:
                raise InternalConsistencyError(
                    f"one-state language fails {label}")
