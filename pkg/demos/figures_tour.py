"""
The four figure automata
========================

Each figure automaton comes with the language it is meant to recognize.
We print the automata, test a few words by hand, and then compare each
automaton with its language on every canonical lasso up to a bound.
"""

from omegacond import accepts, parse_word, verify_figure
from omegacond.oaut import Document, serialize
from omegacond.witnesses import FIGURE_LANGUAGE, FIGURES, language_predicate

# Figure 2 reads its table {q1} under L': a run is accepting when q1 is
# *not* seen infinitely often, i.e. when only finitely many b's occur.
a, cond = FIGURES["fig2"]
print(serialize(Document(a, cond)))

for text in [":a", "bbb:a", ":ab", ":b"]:
    w = parse_word(text)
    print(f"{text:>6}  automaton={accepts(a, cond, w)!s:5}  language={language_predicate('L1', w)}")

# The same comparison, exhaustively.  ``verify_figure`` returns Equal or the
# first word on which the automaton and the language disagree.
for fid in sorted(FIGURES):
    print(fid, FIGURE_LANGUAGE[fid], verify_figure(fid, 4, 4))

# Figure 5 is read under (fin, =) with the table {∅, {q2}, {q3, q4}}: the
# set of states seen finitely often (but at least once) must be exactly one
# of those.  ab^ω passes through q1 forever (fin = ∅); b^ω loops in q4
# after leaving q3 once (fin = {q3}), which is not in the table.
a5, c5 = FIGURES["fig5"]
for text in ["a:b", "b:a", ":b", "ba:ab"]:
    print(f"fig5 {text:>6} -> {accepts(a5, c5, parse_word(text))}")
