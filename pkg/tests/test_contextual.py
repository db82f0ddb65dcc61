import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icgram.contextual import (Context, ContextualGrammar, SelectionPair,
                               derive_step, enumerate_ic, ensure_valid,
                               member_ic, member_trace, selection_in_family,
                               split_definite_selection,
                               split_finite_selection, successors, validate)
from icgram.errors import (DecompositionMismatchError, InvalidGrammarError,
                           NonFiniteSelectionError)
from icgram.regex import parse_regex
from icgram.subregular import Verdict, parse_family_label
from icgram.witnesses import build_witness
from icgram.words import Alphabet, all_words, word_from_text, word_to_text

UAB = Alphabet.of("a", "b")


@pytest.fixture(scope="module")
def l1():
    return build_witness("L1").grammar


@pytest.fixture(scope="module")
def l2():
    return build_witness("L2").grammar


# --- single steps -----------------------------------------------------------

def test_first_steps_are_annotated_and_deterministic(l1):
    steps = derive_step(l1, ("c",))
    assert [str(s) for s in steps] == [
        "c => abcab  [pair 1, (ab, ab), infix c]",
        "c => dec  [pair 2, (d, e), infix @]",
        "c => cde  [pair 2, (d, e), infix @]",
    ]
    assert steps == derive_step(l1, ("c",))


def test_step_anatomy_holds_everywhere(l1, l2):
    for g, w in ((l1, ("a", "b", "c", "a", "b")), (l2, ("a", "b"))):
        for s in derive_step(g, w):
            assert s.source == w
            assert s.x1 + s.x2 + s.x3 == w
            assert s.target == s.x1 + s.context.left + s.x2 + s.context.right + s.x3
            assert g.pairs[s.pair_index].selects(s.x2)
            assert len(s.target) > len(s.source)  # contexts are never empty


def test_successors_of_l2_axiom(l2):
    got = {word_to_text(w) for w in successors(l2, ("a", "b"))}
    assert got == {"acbc", "cabc"}


def test_selection_respects_its_subalphabet(l1):
    # pair 1 selects within {b, c} only: no infix may straddle other letters
    for s in derive_step(l1, word_from_text("abcab", l1.alphabet)):
        if s.pair_index == 0:
            assert set(s.x2) <= {"b", "c"}


def test_foreign_symbols_rejected(l2):
    with pytest.raises(Exception):
        derive_step(l2, ("z",))


# --- enumeration and membership ----------------------------------------------

def test_enumeration_counts_frozen(l1, l2):
    assert len(enumerate_ic(l2, 6)) == 9
    assert len(enumerate_ic(l2, 8)) == 14
    assert len(enumerate_ic(l1, 8)) == 29
    assert len(enumerate_ic(l1, 11)) == 363


def test_membership_frozen_cases(l1):
    yes = ["c", "abcab", "aabbcabab", "daaebbcabab"]
    no = ["", "ab", "dcabab", "abcabab"]
    for t in yes:
        assert member_ic(l1, word_from_text(t, l1.alphabet)), t
    for t in no:
        assert not member_ic(l1, word_from_text(t, l1.alphabet)), t


def test_member_trace_replays_as_forward_steps(l1):
    w = word_from_text("daaebbcabab", l1.alphabet)
    trace = member_trace(l1, w)
    assert trace is not None and len(trace) == 3
    assert trace[0].source in l1.axioms
    for a, b in zip(trace, trace[1:]):
        assert a.target == b.source
    assert trace[-1].target == w
    for s in trace:
        assert s in derive_step(l1, s.source)
    assert member_trace(l1, ("c",)) == ()  # axioms get the empty trace
    assert member_trace(l1, ("a",)) is None


def test_member_agrees_with_enumeration_on_l2(l2):
    lang = enumerate_ic(l2, 6)
    for w in all_words(l2.alphabet, 6):
        assert member_ic(l2, w) == (w in lang), word_to_text(w)


# --- validation ---------------------------------------------------------------

def test_validate_reports_every_problem():
    sel = Alphabet.of("a")
    pair_ok = SelectionPair.from_regex(sel, parse_regex("a*", sel),
                                       (Context(("a",), ()),))
    bad = ContextualGrammar(
        UAB,
        (("a", "z"),),
        (pair_ok,
         SelectionPair.from_regex(sel, parse_regex("a", sel), ()),
         SelectionPair.from_regex(sel, parse_regex("a", sel),
                                  (Context((), ()), Context(("q",), ())))))
    problems = validate(bad)
    text = "\n".join(str(p) for p in problems)
    assert "axiom 1" in text and "'z'" in text
    assert "pair 2: pair has no contexts" in text
    assert "pair 3, context 1: empty context" in text
    assert "pair 3, context 2" in text and "'q'" in text
    with pytest.raises(InvalidGrammarError) as err:
        ensure_valid(bad)
    assert len(err.value.diagnostics) == len(problems) >= 4


def test_validate_subalphabet_mismatch():
    outside = Alphabet.of("a", "q")
    pair = SelectionPair.from_regex(outside, parse_regex("a", outside),
                                    (Context(("a",), ()),))
    g = ContextualGrammar(UAB, (("a",),), (pair,))
    problems = validate(g)
    assert any("not a subset" in p.message for p in problems)


def test_valid_grammar_has_no_diagnostics(l1, l2):
    assert validate(l1) == [] and validate(l2) == []


# --- splitting constructions ---------------------------------------------------

def test_split_finite_preserves_language_with_singleton_certificates(l2):
    split = split_finite_selection(l2)
    assert enumerate_ic(split, 8) == enumerate_ic(l2, 8)
    # {ab, b} becomes two pairs, each a one-nonterminal, one-rule grammar
    assert len(split.pairs) == 2
    for pair in split.pairs:
        g = pair.source_grammar
        assert g is not None
        assert len(g.nonterminals) == 1 and len(g.rules) == 1


def test_split_finite_rejects_infinite_selection(l1):
    with pytest.raises(NonFiniteSelectionError):
        split_finite_selection(l1)


def _definite_fixture():
    u = Alphabet.of("a", "b", "c", "d")
    sel = Alphabet.of("a", "b", "c")
    pair = SelectionPair.from_regex(sel, parse_regex("ab|(a|b|c)*c", sel),
                                    (Context(("d",), ("d",)),))
    return ContextualGrammar(u, (("a", "b"), ("c",)), (pair,))


def test_split_definite_preserves_language():
    g = _definite_fixture()
    split = split_definite_selection(g, [([("a", "b")], [("c",)])])
    assert len(split.pairs) == 2
    assert enumerate_ic(split, 8) == enumerate_ic(g, 8)
    finite, suffix = split.pairs
    assert finite.source_grammar is not None
    assert len(finite.source_grammar.nonterminals) == 1
    assert suffix.source_grammar is not None
    assert len(suffix.source_grammar.nonterminals) == 1
    # the suffix pair really selects U*B
    assert suffix.selects(("b", "b", "c")) and not suffix.selects(("a", "b"))


def test_split_definite_verifies_the_decomposition():
    g = _definite_fixture()
    with pytest.raises(DecompositionMismatchError):
        split_definite_selection(g, [([("a", "b")], [("b",)])])
    with pytest.raises(DecompositionMismatchError):
        split_definite_selection(g, [])


# --- selection families ---------------------------------------------------------

def test_selection_in_family_per_pair(l1):
    res = selection_in_family(l1, parse_family_label("RL_V(1)"))
    assert res.overall is Verdict.YES
    assert [pv.verdict for pv in res.per_pair] == [Verdict.YES, Verdict.YES]
    res2 = selection_in_family(l1, parse_family_label("PS"))
    assert res2.overall is Verdict.NO
    assert any(pv.verdict is Verdict.NO for pv in res2.per_pair)


def test_selection_in_family_ord_is_three_valued():
    sel = Alphabet.of("a", "b")
    pair = SelectionPair.from_regex(sel, parse_regex("(ab)*", sel),
                                    (Context(("a",), ()),))
    g = ContextualGrammar(UAB, (("a",),), (pair,))
    res = selection_in_family(g, parse_family_label("ORD"))
    assert res.overall is Verdict.UNKNOWN
    assert "monotone" in res.per_pair[0].note


# --- randomized agreement -------------------------------------------------------

_SELECTIONS = ["b", "ab|b", "a*", "(a|b)*b", "ab", "b*a", "()|a"]
_CONTEXTS = [("a", ""), ("", "b"), ("a", "b"), ("ab", "")]
_AXIOMS = [(), ("a",), ("b", "a"), ("a", "b", "b")]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(_SELECTIONS), min_size=1, max_size=2),
       st.lists(st.sampled_from(_CONTEXTS), min_size=1, max_size=2,
                unique=True),
       st.lists(st.sampled_from(_AXIOMS), min_size=1, max_size=2,
                unique=True))
def test_enumeration_and_membership_agree(sels, ctxs, axioms):
    contexts = tuple(Context(tuple(l), tuple(r)) for l, r in ctxs)
    pairs = tuple(SelectionPair.from_regex(UAB, parse_regex(s, UAB), contexts)
                  for s in sels)
    g = ContextualGrammar(UAB, tuple(axioms), pairs)
    lang = enumerate_ic(g, 6)
    for w in all_words(UAB, 6):
        assert member_ic(g, w) == (w in lang), word_to_text(w)
