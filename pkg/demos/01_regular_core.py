"""
Regular languages: expressions, automata, decisions
===================================================

Everything downstream rests on a small regular-language core: parse an
expression, compile it, minimize, and answer questions exactly.
"""

from icgram.automata import (combine, dfa_to_table, enumerate_regular,
                             equivalent, minimize, regex_to_dfa)
from icgram.regex import parse_regex
from icgram.words import Alphabet, sort_words, word_to_text

# An alphabet is declared up front; expressions are parsed relative to it.
u = Alphabet.of("b", "c")
r = parse_regex("(b*c)(b*c)*", u)
d = minimize(regex_to_dfa(r, u))

print("expression: (b*c)(b*c)*")
print(dfa_to_table(d))

# The same language written differently: one block b*c, repeated.
other = minimize(regex_to_dfa(parse_regex("b*c(b|c)*c|b*c", u), u))
print("equivalent to b*c(b|c)*c|b*c:", equivalent(d, other))

# Boolean combinations stay regular; here: words in the first language
# but not in plain b*c.
single = regex_to_dfa(parse_regex("b*c", u), u)
diff = combine(d, single, "difference")
extra = sort_words(enumerate_regular(diff, 4), u)
print("members with at least two c-blocks, length <= 4:")
for w in extra:
    print("  ", word_to_text(w, u))

# Bounded enumeration is exact: these are *all* members up to length 4.
print("all members up to length 4:",
      " ".join(word_to_text(w, u) for w in sort_words(enumerate_regular(d, 4), u)))
