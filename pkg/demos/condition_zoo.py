"""
One automaton, sixteen conditions
=================================

A table means different things under different acceptance conditions.
Here one small automaton is read under all twelve (stat, rel) pairs and
the four named conditions, and every condition is translated to a Büchi
automaton whose language is checked against the original.
"""

from omegacond import ALL_CONDITIONS, Automaton, accepts, bounded_equiv, enumerate_lassos, to_buchi
from omegacond.conditions import BUCHI
from omegacond.semantics import run_summaries
from omegacond.words import render_word

# q0 -a-> q1, q1 loops on b and returns to q0 on a.
a = Automaton(("a", "b"), ["q0", "q1"],
              [("q0", "a", "q1"), ("q1", "b", "q1"), ("q1", "a", "q0"), ("q0", "b", "q0")],
              "q0", [{"q1"}])

words = list(enumerate_lassos("ab", 1, 2))
print("word      ", " ".join(f"{render_word(w):>5}" for w in words))

# The (run, inf) summaries explain every answer below.
for w in words:
    print(render_word(w), sorted((sorted(s.run_set), sorted(s.inf_set)) for s in run_summaries(a, w)))

for c in ALL_CONDITIONS:
    row = " ".join(f"{'yes' if accepts(a, c, w) else '-':>5}" for w in words)
    print(f"{str(c):<14}{row}")

# Every condition goes to Büchi acceptance through a visited-set Muller
# product and a breakpoint construction.
for c in ALL_CONDITIONS:
    b = to_buchi(a, c)
    print(f"{str(c):<14} Büchi states={len(b.states):3d}  check={bounded_equiv(a, c, b, BUCHI, 3, 3)}")
