"""
Placing a regular language in the subregular families
=====================================================

A classification report answers, for one language at a time: is it
monoidal, finite, nilpotent, combinational, definite, suffix-closed,
ordered, commutative, circular, non-counting, power-separating,
union-free?  Each verdict comes with checkable evidence.
"""

from icgram.automata import regex_to_dfa
from icgram.errors import UndecidedError
from icgram.regex import parse_regex
from icgram.subregular import classify, is_ordered
from icgram.words import Alphabet

def report_for(expr, alphabet_text):
    u = Alphabet.from_text(alphabet_text)
    r = parse_regex(expr, u)
    return classify(regex_to_dfa(r, u), u, source_regex=r, language_name=expr)

# Even-length blocks of a: commutative and circular, but it counts modulo 2,
# so it is neither non-counting nor power-separating.
print(report_for("(aa)*", "a").to_text())

# Words ending in exactly one trailing c-block: definite (the last two
# symbols decide), hence ordered and non-counting.
print(report_for("b*c", "bc").to_text())

# The order check is honestly three-valued.  (ab)* has no monotone order
# on its minimal automaton, is not definite, and does not count symbol
# repetitions -- none of the implemented arguments settles it, and the
# boolean wrapper says so instead of guessing:
try:
    is_ordered(regex_to_dfa(parse_regex("(ab)*", Alphabet.of("a", "b")),
                            Alphabet.of("a", "b")),
               Alphabet.of("a", "b"))
except UndecidedError as e:
    print("is_ordered on (ab)* -> undecided:")
    print("   ", e)
