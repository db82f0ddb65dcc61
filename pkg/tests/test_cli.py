"""End-to-end checks of the command line front end.

Everything runs in-process through ``main`` so exit codes and output bytes
are exactly what a shell would see.
"""

import json

import pytest
from conftest import run_cli

from icgram.automata import regex_to_dfa
from icgram.contextual import enumerate_ic
from icgram.ctxformat import parse_contextual
from icgram.regex import parse_regex
from icgram.subregular import classify
from icgram.words import Alphabet, sort_words, word_to_text


@pytest.fixture(scope="module")
def grammar_files(tmp_path_factory):
    """Witness grammars L1 and L2 exported to .ctx files."""
    root = tmp_path_factory.mktemp("ctx")
    paths = {}
    for cid in ("L1", "L2"):
        code, text = run_cli(["witness", "export", cid])
        assert code == 0
        p = root / f"{cid.lower()}.ctx"
        p.write_text(text, encoding="utf-8")
        paths[cid] = str(p)
    return paths


# --- the documented example invocations ------------------------------------

def test_classify_report_even_length_as():
    code, out = run_cli(["classify", "--regex", "(aa)*", "--alphabet", "a"])
    assert code == 0
    lines = out.splitlines()
    assert "language: (aa)*" in lines
    assert "min-states: 2" in lines
    by_family = {}
    for line in lines:
        head, _, note = line.partition("  # ")
        name, _, verdict = head.partition(": ")
        by_family[name] = verdict
    assert by_family["COMM"] == "yes"
    assert by_family["NC"] == "no"
    assert by_family["PS"] == "no"
    assert by_family["MON"] == "no"
    assert by_family["REG"] == "yes"


def test_witness_run_l2_passes():
    code, out = run_cli(["witness", "run", "L2", "--max-len", "8"])
    assert code == 0
    assert out.splitlines()[0] == "witness L2"
    assert "status: PASS" in out
    assert "fail" not in out


def test_member_accepts_l1_word(grammar_files):
    code, out = run_cli(["member", "--grammar", grammar_files["L1"],
                         "--word", "daaebbcabab"])
    assert code == 0
    assert out == "true\n"


# --- exit code contract -----------------------------------------------------

def test_family_verdicts_drive_exit_codes():
    code, out = run_cli(["classify", "--regex", "(aa)*", "--alphabet", "a",
                         "--family", "COMM"])
    assert code == 0 and out.startswith("COMM: yes")
    code, out = run_cli(["classify", "--regex", "(aa)*", "--alphabet", "a",
                         "--family", "PS"])
    assert code == 1 and out.startswith("PS: no")
    # (ab)* sits in the undecided gap of the order check: not definite, not
    # repetition-counting, minimal automaton unorderable
    code, out = run_cli(["classify", "--regex", "(ab)*", "--alphabet", "ab",
                         "--family", "ORD"])
    assert code == 3 and out.startswith("ORD: unknown")


def test_member_rejects_with_exit_one(grammar_files):
    code, out = run_cli(["member", "--grammar", grammar_files["L1"],
                         "--word", "dcabab"])
    assert code == 1
    assert out == "false\n"


def test_monoid_cap_exit_three():
    code, out = run_cli(["classify", "--regex", "(aa)*", "--alphabet", "a",
                         "--family", "PS", "--caps", "monoid_cap=1"])
    assert code == 3
    assert "unknown" in out and "monoid cap exceeded" in out


@pytest.mark.parametrize("argv", [
    ["classify"],                                       # no language at all
    ["classify", "--regex", "a("],                      # regex without alphabet
    ["classify", "--regex", "a(", "--alphabet", "a"],   # regex parse error
    ["member", "--grammar", "/nonexistent.ctx", "--word", "a"],
    ["enumerate", "--regex", "a*", "--alphabet", "a"],  # missing --max-len
    ["bogus"],                                          # unknown command
    ["classify", "--regex", "a*", "--alphabet", "a", "--caps", "zzz=3"],
    ["convert", "--regex", "a*", "--alphabet", "a", "--to", "canonical"],
])
def test_usage_and_parse_errors_exit_two(argv):
    code, _ = run_cli(argv)
    assert code == 2


def test_regex_errors_carry_line_and_column(capsys):
    code, _ = run_cli(["classify", "--regex", "a(", "--alphabet", "a"])
    assert code == 2
    assert "1:3" in capsys.readouterr().err


# --- machine output ---------------------------------------------------------

def test_machine_classify_round_trips():
    code, out = run_cli(["classify", "--regex", "(aa)*", "--alphabet", "a",
                         "--format", "machine"])
    assert code == 0
    u = Alphabet.from_text("a")
    r = parse_regex("(aa)*", u)
    report = classify(regex_to_dfa(r, u), u, source_regex=r,
                      language_name="(aa)*")
    assert json.loads(out) == report.to_json_dict()


def test_machine_member_payload(grammar_files):
    code, out = run_cli(["member", "--grammar", grammar_files["L1"],
                         "--word", "dcabab", "--format", "machine"])
    assert code == 1
    assert json.loads(out) == {"word": "dcabab", "member": False}


def test_identical_invocations_identical_bytes(grammar_files):
    for argv in (
        ["classify", "--regex", "(aa)*", "--alphabet", "a"],
        ["classify", "--regex", "(aa)*", "--alphabet", "a", "--format", "machine"],
        ["witness", "hierarchy", "--scope", "merged"],
        ["enumerate", "--grammar", grammar_files["L1"], "--max-len", "6"],
    ):
        code_a, out_a = run_cli(argv)
        code_b, out_b = run_cli(argv)
        assert (code_a, out_a) == (code_b, out_b)


# --- the remaining commands -------------------------------------------------

def test_enumerate_matches_library(grammar_files):
    code, out = run_cli(["enumerate", "--grammar", grammar_files["L1"],
                         "--max-len", "5"])
    assert code == 0
    g = parse_contextual(open(grammar_files["L1"], encoding="utf-8").read())
    expected = [word_to_text(w, g.alphabet)
                for w in sort_words(enumerate_ic(g, 5), g.alphabet)]
    assert out.splitlines() == expected

    code, out = run_cli(["enumerate", "--regex", "(aa)*", "--alphabet", "a",
                         "--max-len", "6", "--format", "machine"])
    payload = json.loads(out)
    assert payload["words"] == ["@", "aa", "aaaa", "aaaaaa"]
    assert payload["count"] == 4


def test_measure_exact_values():
    code, out = run_cli(["measure", "--regex", "b*c", "--alphabet", "bc"])
    assert code == 0
    assert "states: 3 (exact)" in out
    assert "nonterminals: 1 (exact)" in out
    assert "rules: 2 (exact)" in out


def test_derive_successors_and_trace(grammar_files):
    code, out = run_cli(["derive", "--grammar", grammar_files["L1"],
                         "--word", "c"])
    assert code == 0
    assert out.splitlines() == [
        "c => abcab  [pair 1, (ab, ab), infix c]",
        "c => dec  [pair 2, (d, e), infix @]",
        "c => cde  [pair 2, (d, e), infix @]",
    ]
    code, out = run_cli(["derive", "--grammar", grammar_files["L1"],
                         "--word", "daaebbcabab", "--trace"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "c"                      # the axiom the trace starts at
    assert lines[-1].endswith("daaebbcabab  [pair 2, (d, e), infix aa]")
    code, out = run_cli(["derive", "--grammar", grammar_files["L1"],
                         "--word", "ab", "--trace"])
    assert code == 1
    assert out == "no derivation\n"


def test_convert_regex_targets():
    code, out = run_cli(["convert", "--regex", "b*c", "--alphabet", "bc",
                         "--to", "dfa"])
    assert code == 0
    assert out.splitlines()[0] == "states: q0 q1 q2"
    assert "q0 c q1" in out.splitlines()
    code, out = run_cli(["convert", "--regex", "b*c", "--alphabet", "bc",
                         "--to", "rlgrammar"])
    assert code == 0
    assert "Q0 -> c Q1" in out.splitlines()


def test_convert_canonical_and_split_finite(grammar_files):
    code, out = run_cli(["convert", "--grammar", grammar_files["L2"],
                         "--to", "canonical"])
    assert code == 0
    assert out == open(grammar_files["L2"], encoding="utf-8").read()

    code, out = run_cli(["convert", "--grammar", grammar_files["L2"],
                         "--to", "split-finite"])
    assert code == 0
    split = parse_contextual(out)
    original = parse_contextual(open(grammar_files["L2"],
                                     encoding="utf-8").read())
    assert len(split.pairs) == 2
    assert enumerate_ic(split, 8) == enumerate_ic(original, 8)


def test_witness_list_and_hierarchy():
    code, out = run_cli(["witness", "list"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == len(["L1", "L2", "L3", "L4", "L6", "L7"])
    assert lines[0].startswith("L1: params none; in RL_V(1)")
    assert all("not in" in line for line in lines)

    code, out = run_cli(["witness", "hierarchy", "--scope", "subregular",
                         "--format", "machine"])
    assert code == 0
    payload = json.loads(out)
    assert payload["scope"] == "subregular"
    assert len(payload["nodes"]) == 25
    assert len(payload["edges"]) == 39
