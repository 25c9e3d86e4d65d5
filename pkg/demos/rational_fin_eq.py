"""
Büchi acceptance rewritten as (fin, =)
======================================

Any Büchi automaton can be turned into one over ``Q ∪ Q×Q`` that accepts
the same language when read under (fin, =).  The pair state ``(q, p)`` is a
one-time detour on the step ``p -> q``; the table asks that exactly one
such detour is taken, from a Büchi state ``p`` that keeps recurring.
"""

from omegacond import Automaton, accepts, bounded_equiv, is_empty, parse_word
from omegacond.conditions import BUCHI, Pair, Rel, Stat
from omegacond.transforms import inf_meets_to_fin_eq

FIN_EQ = Pair(Stat.FIN, Rel.EQ)

# infinitely many b's
a = Automaton(("a", "b"), ["q0", "q1"],
              [("q0", "a", "q0"), ("q0", "b", "q1"), ("q1", "a", "q0"), ("q1", "b", "q1")],
              "q0", [{"q1"}])
out = inf_meets_to_fin_eq(a)
print(len(a.states), "states ->", len(out.states), "states,", len(out.table), "table members")

for text in [":b", "a:ab", ":a", "bbb:a"]:
    w = parse_word(text)
    print(f"{text:>6}  Büchi={accepts(a, BUCHI, w)!s:5}  (fin,=)={accepts(out, FIN_EQ, w)}")

print("bounded check:", bounded_equiv(a, BUCHI, out, FIN_EQ, 4, 4))

# Emptiness of a Büchi automaton comes with a lasso witness.
print(is_empty(a))
print(is_empty(a.replace(table=[set()])))
