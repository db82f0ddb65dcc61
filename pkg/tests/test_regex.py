import pytest
from hypothesis import given
from hypothesis import strategies as st

from icgram.errors import TextFormatError
from icgram.regex import (Concat, EmptyLang, EmptyWord, Literal, Star, Union,
                          alt, enumerate_regex, format_regex,
                          is_union_free_syntax, parse_regex, seq,
                          simplify_empty, word_regex)
from icgram.words import Alphabet

U = Alphabet.of("a", "b", "c")


def test_parse_basics():
    assert parse_regex("a", U) == Literal("a")
    assert parse_regex("()", U) == EmptyWord()
    assert parse_regex("∅", U) == EmptyLang()
    assert parse_regex("ab", U) == Concat((Literal("a"), Literal("b")))
    assert parse_regex("a|b", U) == Union((Literal("a"), Literal("b")))
    assert parse_regex("a*", U) == Star(Literal("a"))


def test_parse_precedence():
    # star > concat > union
    assert parse_regex("ab|c*", U) == Union(
        (Concat((Literal("a"), Literal("b"))), Star(Literal("c"))))
    assert parse_regex("(a|b)c", U) == Concat(
        (Union((Literal("a"), Literal("b"))), Literal("c")))
    assert parse_regex("a(bc)*", U) == Concat(
        (Literal("a"), Star(Concat((Literal("b"), Literal("c"))))))


def test_parse_error_positions():
    with pytest.raises(TextFormatError) as e:
        parse_regex("a|", U)
    assert e.value.column == 3
    with pytest.raises(TextFormatError) as e:
        parse_regex("(ab", U)
    assert e.value.column == 4
    with pytest.raises(TextFormatError) as e:
        parse_regex("a)b", U)
    assert e.value.column == 2
    with pytest.raises(TextFormatError):
        parse_regex("z", U)  # foreign symbol
    with pytest.raises(TextFormatError):
        parse_regex("", U)


def test_format_minimal_parentheses():
    cases = ["a", "ab", "a|b", "a*", "(ab)*", "(a|b)*", "a(b|c)", "ab|c",
             "a|bc*", "(a|b)(b|c)", "a**"]
    for text in cases:
        r = parse_regex(text, U)
        assert parse_regex(format_regex(r), U) == r


def test_enumerate_regex_oracle():
    r = parse_regex("a*b", U)
    assert enumerate_regex(r, 3) == {("b",), ("a", "b"), ("a", "a", "b")}
    assert enumerate_regex(parse_regex("∅", U), 5) == set()
    assert enumerate_regex(parse_regex("()", U), 5) == {()}
    assert enumerate_regex(parse_regex("(a|b)*", U), 2) == {
        (), ("a",), ("b",), ("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")}


def test_seq_alt_flatten_and_units():
    assert seq([]) == EmptyWord()
    assert seq([Literal("a")]) == Literal("a")
    assert seq([Literal("a"), seq([Literal("b"), Literal("c")])]) == \
        Concat((Literal("a"), Literal("b"), Literal("c")))
    assert alt([]) == EmptyLang()
    assert alt([Literal("a"), alt([Literal("b"), Literal("c")])]) == \
        Union((Literal("a"), Literal("b"), Literal("c")))


def test_word_regex():
    assert word_regex(()) == EmptyWord()
    assert word_regex(("a",)) == Literal("a")
    assert enumerate_regex(word_regex(("a", "b")), 4) == {("a", "b")}


def test_union_free_syntax_flag():
    assert is_union_free_syntax(parse_regex("a*b(c)*", U))
    assert not is_union_free_syntax(parse_regex("a|b", U))
    assert not is_union_free_syntax(parse_regex("(a|b)*", U))


def test_simplify_empty():
    r = parse_regex("a∅|b", U)
    s = simplify_empty(r)
    assert s == Literal("b")
    assert simplify_empty(parse_regex("∅*", U)) == EmptyWord()
    assert simplify_empty(parse_regex("a()", U)) == Literal("a")


# --- property: format/parse round-trip on random expressions --------------

def _regex_strategy():
    leaf = st.sampled_from([Literal("a"), Literal("b"), Literal("c"),
                            EmptyWord(), EmptyLang()])

    def extend(children):
        return st.one_of(
            st.tuples(children, children).map(lambda p: seq(list(p))),
            st.tuples(children, children).map(lambda p: alt(list(p))),
            children.map(Star),
        )

    return st.recursive(leaf, extend, max_leaves=12)


@given(_regex_strategy())
def test_format_parse_round_trip(r):
    assert parse_regex(format_regex(r), U) == r


@given(_regex_strategy())
def test_simplify_preserves_words(r):
    assert enumerate_regex(simplify_empty(r), 4) == enumerate_regex(r, 4)
