import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_dfa
from icgram.automata import (accepts, combine, complement, dfa_to_table,
                             distinguishing_word, empty_dfa, ends_with_dfa,
                             enumerate_regular, equivalent,
                             inclusion_witness, language_is_finite, minimize,
                             nfa_to_dfa, parse_dfa_table, regex_to_dfa,
                             regex_to_nfa, shortest_accepted, universal_dfa,
                             word_set_dfa)
from icgram.errors import InvalidAutomatonError, TextFormatError
from icgram.regex import enumerate_regex, parse_regex
from icgram.words import Alphabet, all_words

U2 = Alphabet.of("a", "b")
U3 = Alphabet.of("a", "b", "c")


def _lang(d, n):
    return enumerate_regular(d, n)


# --- compilation against the structural enumeration oracle ----------------

REGEXES = ["a", "()", "∅", "a*", "ab", "a|b", "(ab)*", "(a|b)*a", "a*b*",
           "(aa)*", "b*c", "(a|bc)*", "a(b|c)*a|b", "((a|b)(a|b))*",
           "ab|ba", "(a*b)*"]


@pytest.mark.parametrize("text", REGEXES)
def test_regex_pipeline_matches_enumeration(text):
    r = parse_regex(text, U3)
    d = regex_to_dfa(r, U3)
    assert _lang(d, 5) == enumerate_regex(r, 5)


@pytest.mark.parametrize("text", REGEXES)
def test_minimize_preserves_language(text):
    d = regex_to_dfa(parse_regex(text, U3), U3)
    dm = minimize(d)
    assert equivalent(d, dm)
    assert len(dm.states) <= len(d.states)


def test_minimize_is_canonical():
    # same language, different expressions -> identical automaton objects
    d1 = minimize(regex_to_dfa(parse_regex("(a|b)*", U2), U2))
    d2 = minimize(regex_to_dfa(parse_regex("(a*b*)*", U2), U2))
    assert d1 == d2
    d3 = minimize(regex_to_dfa(parse_regex("a(ba)*|(ab)*", U2), U2))
    d4 = minimize(regex_to_dfa(parse_regex("(ab)*|a(ba)*", U2), U2))
    assert d3 == d4


def test_minimize_idempotent():
    d = minimize(regex_to_dfa(parse_regex("b*c", U3), U3))
    assert minimize(d) == d


def test_min_state_counts():
    assert len(minimize(regex_to_dfa(parse_regex("b*c", U3), U3)).states) == 3
    assert len(minimize(regex_to_dfa(parse_regex("(aa)*", Alphabet.of("a")),
                                     Alphabet.of("a"))).states) == 2
    assert len(minimize(universal_dfa(U3)).states) == 1
    assert len(minimize(empty_dfa(U3)).states) == 1


def test_equivalence_and_distinguishing_word():
    d1 = regex_to_dfa(parse_regex("(ab)*", U2), U2)
    d2 = regex_to_dfa(parse_regex("(ab)*ab", U2), U2)
    assert not equivalent(d1, d2)
    w = distinguishing_word(d1, d2)
    assert w is not None and (accepts(d1, w) != accepts(d2, w))
    assert w == ()  # shortest difference: the empty word
    assert distinguishing_word(d1, d1) is None


def test_complement_and_combine():
    d = regex_to_dfa(parse_regex("a*b", U2), U2)
    dc = complement(d)
    words = list(all_words(U2, 4))
    for w in words:
        assert accepts(d, w) != accepts(dc, w)
    du = regex_to_dfa(parse_regex("ab*", U2), U2)
    both = combine(d, du, "intersection")
    either = combine(d, du, "union")
    diff = combine(d, du, "difference")
    for w in words:
        assert accepts(both, w) == (accepts(d, w) and accepts(du, w))
        assert accepts(either, w) == (accepts(d, w) or accepts(du, w))
        assert accepts(diff, w) == (accepts(d, w) and not accepts(du, w))


def test_inclusion_witness():
    small = regex_to_dfa(parse_regex("ab", U2), U2)
    big = regex_to_dfa(parse_regex("a(a|b)*", U2), U2)
    assert inclusion_witness(small, big) is None
    w = inclusion_witness(big, small)
    assert w is not None and accepts(big, w) and not accepts(small, w)


def test_shortest_accepted_and_emptiness():
    assert shortest_accepted(empty_dfa(U2)) is None
    assert shortest_accepted(universal_dfa(U2)) == ()
    d = regex_to_dfa(parse_regex("aab|ba", U2), U2)
    assert shortest_accepted(d) == ("b", "a")


def test_finiteness():
    assert language_is_finite(regex_to_dfa(parse_regex("ab|ba", U2), U2))
    assert not language_is_finite(regex_to_dfa(parse_regex("a*b", U2), U2))
    assert language_is_finite(empty_dfa(U2))


def test_word_set_and_ends_with():
    ws = {("a", "b"), ("b",)}
    d = word_set_dfa(ws, U2)
    assert _lang(d, 4) == ws
    e = ends_with_dfa(U3, ["b", "c"])
    assert _lang(e, 2) == {("b",), ("c",), ("a", "b"), ("a", "c"),
                           ("b", "b"), ("b", "c"), ("c", "b"), ("c", "c")}
    assert len(minimize(e).states) == 2


def test_dfa_validation():
    with pytest.raises(InvalidAutomatonError):
        # missing transition
        from icgram.automata import Dfa
        Dfa((0, 1), U2, {(0, "a"): 1, (0, "b"): 0, (1, "a"): 0}, 0, frozenset({1}))


def test_table_round_trip():
    d = minimize(regex_to_dfa(parse_regex("b*c", U3), U3))
    text = dfa_to_table(d)
    back = parse_dfa_table(text)
    assert equivalent(d, back)
    assert dfa_to_table(minimize(back)) == text  # canonical form is stable


def test_table_parse_errors():
    with pytest.raises(TextFormatError):
        parse_dfa_table("states: q0\nalphabet: a\ninitial: q9\naccepting: q0\nq0 a q0\n")
    with pytest.raises(TextFormatError):
        parse_dfa_table("nonsense\n")


# --- properties over random automata ---------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 5))
def test_minimize_canonical_under_state_renaming(seed, n_states):
    rng = np.random.default_rng(seed)
    d = random_dfa(rng, n_states, U2)
    # rename states by a random permutation; canonical form must not move
    perm = list(rng.permutation(n_states))
    renamed = type(d)(
        tuple(perm[q] for q in d.states), d.alphabet,
        {(perm[q], a): perm[t] for (q, a), t in d.delta.items()},
        perm[d.initial], frozenset(perm[q] for q in d.accepting))
    assert minimize(d) == minimize(renamed)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 5), st.integers(1, 5))
def test_equivalent_iff_no_distinguishing_word(seed, n1, n2):
    rng = np.random.default_rng(seed)
    d1, d2 = random_dfa(rng, n1, U2), random_dfa(rng, n2, U2)
    w = distinguishing_word(d1, d2)
    if w is None:
        assert equivalent(d1, d2)
        assert _lang(d1, 4) == _lang(d2, 4)
    else:
        assert accepts(d1, w) != accepts(d2, w)
        # and it is a shortest one: all strictly shorter words agree
        if len(w) > 0:
            assert _lang(d1, len(w) - 1) == _lang(d2, len(w) - 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 6))
def test_nfa_determinization_preserves_words(seed, n_states):
    rng = np.random.default_rng(seed)
    d = random_dfa(rng, n_states, U3)
    r_text = "(a|b)*c|ca*"
    r = parse_regex(r_text, U3)
    nfa = regex_to_nfa(r, U3)
    det = nfa_to_dfa(nfa)
    assert _lang(det, 4) == enumerate_regex(r, 4)
    assert equivalent(combine(d, det, "union"), combine(det, d, "union"))
