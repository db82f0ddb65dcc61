"""Text format for contextual grammars.

Layout (indentation is cosmetic; structure is keyword-driven)::

    alphabet: a b c d e
    axiom: c
    pair:
      alphabet: b c
      selection regex: b*c
      context: (ab, ab)
    pair:
      alphabet: a
      selection grammar:
        nonterminals: S
        terminals: a
        start: S
        S -> aa S
        S -> @
      context: (d, e)

``@`` stands for the empty word in axioms and context sides.  A selection
may be given as a regex (single-character subalphabets only), a right-linear
grammar, or a DFA transition table (``selection dfa:``).  Comments run from
``#`` to end of line.

The round trip parse(format(g)) preserves pair order, axiom order, context
order and the selection source form exactly.  Selections stored only as a
DFA have their state names normalized on the way out, so for those the round
trip is stable from the first re-parse onwards.
"""

from __future__ import annotations

from .automata import _parse_dfa_lines, dfa_to_table
from .contextual import Context, ContextualGrammar, SelectionPair
from .errors import TextFormatError
from .regex import format_regex, parse_regex
from .rlgrammar import grammar_to_text, parse_grammar_lines
from .words import Alphabet, word_from_text, word_to_text

_PAIR_KEYS = ("alphabet:", "selection regex:", "selection grammar:",
              "selection dfa:", "context:", "pair:")


def format_contextual(g: ContextualGrammar) -> str:
    out: list[str] = ["alphabet: " + " ".join(g.alphabet)]
    for w in g.axioms:
        out.append("axiom: " + word_to_text(w, g.alphabet))
    for pair in g.pairs:
        out.append("pair:")
        out.append("  alphabet: " + " ".join(pair.declared_alphabet))
        if pair.source_regex is not None:
            if not pair.declared_alphabet.single_char:
                raise TextFormatError(
                    "regex selections over multi-character symbols have no "
                    "text form; convert the pair to a grammar first")
            out.append("  selection regex: " + format_regex(pair.source_regex))
        elif pair.source_grammar is not None:
            out.append("  selection grammar:")
            for line in grammar_to_text(pair.source_grammar).splitlines():
                out.append("    " + line)
        else:
            out.append("  selection dfa:")
            for line in dfa_to_table(pair.dfa).splitlines():
                out.append("    " + line)
        for ctx in pair.contexts:
            out.append("  context: ({}, {})".format(
                word_to_text(ctx.left, g.alphabet),
                word_to_text(ctx.right, g.alphabet)))
    return "\n".join(out) + "\n"


def _clean_lines(text: str) -> list[tuple[int, str]]:
    lines = [(i + 1, raw.split("#", 1)[0].strip())
             for i, raw in enumerate(text.splitlines())]
    return [(ln, t) for ln, t in lines if t]


def _parse_context(body: str, alphabet: Alphabet, ln: int) -> Context:
    body = body.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise TextFormatError("context looks like (left, right)", line=ln)
    inner = body[1:-1]
    if inner.count(",") != 1:
        raise TextFormatError("context needs exactly one comma", line=ln)
    left_text, right_text = (part.strip() for part in inner.split(","))
    try:
        return Context(word_from_text(left_text, alphabet),
                       word_from_text(right_text, alphabet))
    except Exception as e:
        raise TextFormatError(str(e), line=ln) from None


def parse_contextual(text: str) -> ContextualGrammar:
    lines = _clean_lines(text)
    if not lines:
        raise TextFormatError("empty grammar description")
    pos = 0

    ln, first = lines[pos]
    if not first.startswith("alphabet:"):
        raise TextFormatError("grammar starts with an 'alphabet:' line", line=ln)
    try:
        alphabet = Alphabet(tuple(first[len("alphabet:"):].split()))
    except ValueError as e:
        raise TextFormatError(str(e), line=ln) from None
    pos += 1

    axioms = []
    while pos < len(lines) and lines[pos][1].startswith("axiom:"):
        ln, t = lines[pos]
        try:
            axioms.append(word_from_text(t[len("axiom:"):], alphabet))
        except Exception as e:
            raise TextFormatError(str(e), line=ln) from None
        pos += 1

    pairs = []
    while pos < len(lines):
        ln, t = lines[pos]
        if t != "pair:":
            raise TextFormatError(f"expected 'pair:', got {t!r}", line=ln)
        pos += 1
        pair, pos = _parse_pair(lines, pos, alphabet)
        pairs.append(pair)

    return ContextualGrammar(alphabet, tuple(axioms), tuple(pairs))


def _parse_pair(lines: list[tuple[int, str]], pos: int,
                alphabet: Alphabet) -> tuple[SelectionPair, int]:
    if pos >= len(lines) or not lines[pos][1].startswith("alphabet:"):
        ln = lines[pos][0] if pos < len(lines) else lines[-1][0]
        raise TextFormatError("pair starts with its 'alphabet:' line", line=ln)
    ln, t = lines[pos]
    try:
        declared = Alphabet(tuple(t[len("alphabet:"):].split()))
    except ValueError as e:
        raise TextFormatError(str(e), line=ln) from None
    pos += 1

    if pos >= len(lines):
        raise TextFormatError("pair is missing its selection", line=ln)
    ln, t = lines[pos]
    source_kind = None
    regex_text = ""
    for key in ("selection regex:", "selection grammar:", "selection dfa:"):
        if t.startswith(key):
            source_kind = key
            regex_text = t[len(key):].strip()
            break
    if source_kind is None:
        raise TextFormatError(
            "expected 'selection regex:', 'selection grammar:' or "
            "'selection dfa:'", line=ln)
    sel_line = ln
    pos += 1

    block: list[tuple[int, str]] = []
    while pos < len(lines) and not (lines[pos][1].startswith("context:")
                                    or lines[pos][1] == "pair:"):
        block.append(lines[pos])
        pos += 1

    contexts = []
    while pos < len(lines) and lines[pos][1].startswith("context:"):
        ln, t = lines[pos]
        contexts.append(_parse_context(t[len("context:"):], alphabet, ln))
        pos += 1

    if source_kind == "selection regex:":
        if block:
            raise TextFormatError("unexpected lines after a regex selection",
                                  line=block[0][0])
        try:
            r = parse_regex(regex_text, declared)
        except TextFormatError as e:
            raise TextFormatError(e.bare_message, line=sel_line,
                                  column=e.column) from None
        pair = SelectionPair.from_regex(declared, r, contexts)
    elif source_kind == "selection grammar:":
        if regex_text:
            raise TextFormatError("grammar selections start on the next line",
                                  line=sel_line)
        g = parse_grammar_lines(block)
        pair = SelectionPair.from_grammar(g, contexts)
        if g.terminals != declared:
            # keep the declared alphabet authoritative; validate() reports it
            pair = SelectionPair(declared, pair.dfa, pair.contexts,
                                 source_grammar=g)
    else:
        if regex_text:
            raise TextFormatError("dfa selections start on the next line",
                                  line=sel_line)
        d = _parse_dfa_lines(block)
        pair = SelectionPair.from_dfa(d, contexts)
        if d.alphabet != declared:
            pair = SelectionPair(declared, d, pair.contexts)
    return pair, pos
