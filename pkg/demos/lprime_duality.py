"""
L' and (ninf, ⊓)
================

``F ⊄ inf`` says some state of ``F`` is not seen infinitely often, which is
``F ∩ ninf ≠ ∅``.  So L' and (ninf, ⊓) agree on the same table.  For L and
(ninf, ⊆) the matching table is the complemented one, since ``F ⊆ inf``
iff ``ninf ⊆ Q \\ F``.  Complementing the table does not relate L' and
(ninf, ⊓), and Figure 2 shows why.
"""

from omegacond import bounded_equiv
from omegacond.conditions import Named, Pair, Rel, Stat
from omegacond.transforms import complement_table
from omegacond.witnesses import FIGURES

NINF_MEETS, NINF_SUB = Pair(Stat.NINF, Rel.MEETS), Pair(Stat.NINF, Rel.SUBSETEQ)
fig2 = FIGURES["fig2"][0]
comp = complement_table(fig2)
print("table:", sorted(map(sorted, fig2.table)), "complemented:", sorted(map(sorted, comp.table)))

print("L  vs (ninf,⊆), complemented table:", bounded_equiv(fig2, Named.L, comp, NINF_SUB, 4, 4))
print("L' vs (ninf,⊓), same table:        ", bounded_equiv(fig2, Named.LPRIME, fig2, NINF_MEETS, 4, 4))
# a^ω: inf = {q0}; {q1} ⊄ inf holds, but ninf = {q1} misses the complement {q0}
print("L' vs (ninf,⊓), complemented table:", bounded_equiv(fig2, Named.LPRIME, comp, NINF_MEETS, 4, 4))
