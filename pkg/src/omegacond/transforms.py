"""Condition-changing automaton rewrites.

Each function takes an automaton read under one acceptance condition and
returns an automaton recognizing the same language under another.  Product
constructions keep only the part reachable from the initial state, except
where noted.  :data:`TRANSFORMS` lists every rewrite with its source and
target conditions and the structural properties it preserves.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations, product
from typing import Callable, Optional

from .conditions import BUCHI, Condition, Named, Pair, Rel, Stat
from .core import (SINK, Automaton, assign_names, explore, fresh_name, is_complete,
                   is_deterministic, join_name, set_name)
from .errors import PreconditionError, UnsupportedCondition, check_limit
from .semantics import accepts
from .words import LassoWord


def _powerset(items):
    items = list(items)
    return (frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1)))


def _union(table) -> frozenset:
    return frozenset().union(*table) if table else frozenset()


def _build(a: Automaton, roots, step, table_keys, render, sink: bool = False) -> Automaton:
    """Explore from ``roots`` and name the result.  The key ``None`` stands
    for a sink state, which gets a fresh name and self-loops; with ``sink``
    it is added even if no transition reaches it."""
    keys, trans = explore(a.alphabet, roots, step)
    real = [k for k in keys if k is not None]
    names = assign_names(real, render)
    if sink or None in keys:
        names[None] = fresh_name(SINK, set(names.values()))
        real.append(None)
        trans = [t for t in trans if t[0] is not None] + [(None, x, None) for x in a.alphabet]
    tk = table_keys(real) if callable(table_keys) else table_keys
    return Automaton(
        alphabet=a.alphabet,
        states=[names[k] for k in real],
        transitions=[(names[p], x, names[q]) for p, x, q in trans],
        initial=names[roots[0]],
        table=[[names[k] for k in f] for f in tk],
    )


def _visited_render(a: Automaton):
    order = a.index.__getitem__
    return lambda k: join_name(k[0], set_name(k[1], order))


# -- A and A' ---------------------------------------------------------------

def a_to_run_meets(a: Automaton) -> Automaton:
    """A to (run, meets): track the visited set; ``(q, S)`` is accepting
    once ``S`` covers some table member."""
    check_limit("product_states", len(a.states), "a-to-run-meets |Q|")
    table = list(a.table)

    def step(k, x):
        p, s = k
        return [(q, s | {q}) for q in a.successors(p, x)]

    def tkeys(keys):
        return [[k] for k in keys if any(f <= k[1] for f in table)]

    return _build(a, [(a.initial, frozenset())], step, tkeys, _visited_render(a))


def run_meets_to_a(a: Automaton) -> Automaton:
    """(run, meets) to A: one singleton per state occurring in the table."""
    return a.replace(table=[{q} for q in _union(a.table)])


def aprime_to_run_subseteq(a: Automaton) -> Automaton:
    """A' to (run, subseteq): fall into a sink once every table member is
    covered by the visited set.  The table is the single set of all
    non-sink states, which is all that matters for an upward-closed
    family under subseteq."""
    check_limit("product_states", len(a.states), "aprime-to-run-subseteq |Q|")
    table = list(a.table)

    def step(k, x):
        if k is None:
            return []
        p, s = k
        out = []
        for q in a.successors(p, x):
            s2 = s | {q}
            out.append(None if all(f <= s2 for f in table) else (q, s2))
        return out

    return _build(a, [(a.initial, frozenset())], step, lambda keys: [[k for k in keys if k is not None]],
                  _visited_render(a), sink=True)


def run_subseteq_to_aprime(a: Automaton) -> Automaton:
    """(run, subseteq) to A': fall into a sink once the visited set fits in
    no table member; the table is ``{{sink}}``."""
    check_limit("product_states", len(a.states), "run-subseteq-to-aprime |Q|")
    table = list(a.table)

    def step(k, x):
        if k is None:
            return []
        p, s = k
        out = []
        for q in a.successors(p, x):
            s2 = s | {q}
            out.append((q, s2) if any(s2 <= f for f in table) else None)
        return out

    return _build(a, [(a.initial, frozenset())], step, [[None]], _visited_render(a), sink=True)


# -- L, L' and ninf ---------------------------------------------------------

# F ⊆ inf iff ninf ⊆ Q \ F, and inf = F iff ninf = Q \ F.
COMPLEMENT_DUALS = {
    Named.L: Pair(Stat.NINF, Rel.SUBSETEQ),
    Pair(Stat.INF, Rel.EQ): Pair(Stat.NINF, Rel.EQ),
}
COMPLEMENT_DUALS.update({v: k for k, v in list(COMPLEMENT_DUALS.items())})

# F ⊄ inf iff F meets ninf: L' and (ninf, ⊓) agree on the *same* table.
# Complementing the table does not relate them (Figure 2 is a
# counterexample: a^ω is L'-accepted, but inf = {q0} leaves ninf ∩ {q0} empty).
SAME_TABLE_DUALS = {Named.LPRIME: Pair(Stat.NINF, Rel.MEETS), Pair(Stat.NINF, Rel.MEETS): Named.LPRIME}


def complement_table(a: Automaton) -> Automaton:
    """Replace every table member ``F`` by ``Q \\ F``."""
    q = frozenset(a.states)
    return a.replace(table=[q - f for f in a.table])


# Conditions under which routing missing transitions to a fresh sink keeps
# the language: a run that reaches the sink has inf = {sink}, run and inf
# both contain it, and it lies in no table member.
SINK_SAFE = (
    Pair(Stat.INF, Rel.MEETS), Pair(Stat.INF, Rel.SUBSETEQ), Pair(Stat.INF, Rel.EQ),
    Pair(Stat.RUN, Rel.SUBSETEQ), Pair(Stat.RUN, Rel.EQ), Named.L,
)


def add_sink(a: Automaton, cond: Condition) -> Automaton:
    """Complete ``a`` with a fresh self-looping sink.

    Only conditions in :data:`SINK_SAFE` are accepted.  Under L an empty
    table member would be satisfied by the sink runs, so it is replaced by
    the singletons of the original states (every original run has a
    nonempty inf-set inside Q).  Conditions such as L', (ninf, ⊆) or
    (ninf, ⊓) are refused: a run stuck in the sink has every original
    state outside inf and would become accepting.
    """
    if cond not in SINK_SAFE:
        raise UnsupportedCondition(f"add-sink does not preserve the language under {cond}")
    if is_complete(a):
        return a
    bot = fresh_name(SINK, set(a.states))
    trans = set(a.transitions)
    for p in a.states:
        for x in a.alphabet:
            if not a.successors(p, x):
                trans.add((p, x, bot))
    trans.update((bot, x, bot) for x in a.alphabet)
    table = set(a.table)
    if cond is Named.L and frozenset() in table:
        table.discard(frozenset())
        table.update(frozenset([q]) for q in a.states)
    return Automaton(a.alphabet, a.states + (bot,), trans, a.initial, table)


def inf_meets_to_L(a: Automaton) -> Automaton:
    """(inf, meets) to L: one singleton per state occurring in the table."""
    return a.replace(table=[{q} for q in _union(a.table)])


def L_to_inf_meets(a: Automaton) -> Automaton:
    """L to Büchi for a complete deterministic automaton.

    Each member ``F = {f_0 .. f_k-1}`` is checked by a round-robin counter
    that moves from ``i`` to ``i+1`` on entering ``f_i`` and marks value
    ``k`` as a completed round.  The per-member counter automata all follow
    the same deterministic run of ``a``, so their product is ``a`` times a
    vector of counters; member ``j`` contributes the table set of states
    whose ``j``-th counter reads ``k_j``.  An empty member accepts every
    run, so its table set is every state.
    """
    if not (is_deterministic(a) and is_complete(a)):
        raise PreconditionError("L-to-inf-meets needs a deterministic complete automaton")
    members = sorted(a.table, key=lambda f: sorted(a.index[q] for q in f))
    orders = [a.sorted_set(f) for f in members]

    def advance(counters, q):
        out = []
        for c, fs in zip(counters, orders):
            if not fs:
                out.append(0)
                continue
            base = 0 if c == len(fs) else c
            out.append(base + 1 if q == fs[base] else base)
        return tuple(out)

    def step(k, x):
        p, cs = k
        return [(q, advance(cs, q)) for q in a.successors(p, x)]

    def tkeys(keys):
        out = []
        for j, fs in enumerate(orders):
            out.append([k for k in keys if not fs or k[1][j] == len(fs)])
        return out

    return _build(a, [(a.initial, (0,) * len(orders))], step, tkeys,
                  lambda k: join_name(k[0], *map(str, k[1])))


def single_accepting_Lprime(a: Automaton) -> Automaton:
    """L' with one accepting singleton ``{(f, Fbar)}``.

    ``Fbar`` is the union of the table and ``f`` its least element in state
    order.  The second component collects visited states of ``Fbar`` and
    is reset to the empty set when leaving ``(f, Fbar)``; a run satisfies
    L' exactly when it sees ``(f, Fbar)`` finitely often.  The state
    ``(f, Fbar)`` is always built, reachable or not.
    """
    fbar = _union(a.table)
    if not fbar:
        return Automaton(a.alphabet, [SINK], [(SINK, x, SINK) for x in a.alphabet], SINK, [[SINK]])
    check_limit("product_states", len(a.states), "single-accepting-Lprime |Q|")
    f = a.sorted_set(fbar)[0]
    acc = (f, fbar)

    def step(k, x):
        p, s = k
        if k == acc:
            return [(q, frozenset()) for q in a.successors(p, x)]
        return [(q, s | ({q} & fbar)) for q in a.successors(p, x)]

    return _build(a, [(a.initial, frozenset()), acc], step, [[acc]], _visited_render(a))


def lprime_to_inf_subseteq(a: Automaton) -> Automaton:
    """L' with table ``{{f}}`` to (inf, subseteq) with table ``{Q \\ {f}}``."""
    members = list(a.table)
    if len(members) != 1 or len(members[0]) != 1:
        raise PreconditionError("lprime-to-inf-subseteq needs a table of one singleton; "
                                "apply single-accepting-Lprime first")
    return a.replace(table=[frozenset(a.states) - members[0]])


# -- fin ---------------------------------------------------------------------

def complete_for_fin(a: Automaton) -> Automaton:
    """Complete for (fin, ⊆) and (fin, =): missing moves go to a sink that
    leads to a second self-looping sink, so any run using it has the first
    sink in its fin-set, which no table member contains."""
    if is_complete(a):
        return a
    b1 = fresh_name(SINK, set(a.states))
    b2 = fresh_name(b1 + "'", set(a.states) | {b1})
    trans = set(a.transitions)
    for p in a.states:
        for x in a.alphabet:
            if not a.successors(p, x):
                trans.add((p, x, b1))
    for x in a.alphabet:
        trans.add((b1, x, b2))
        trans.add((b2, x, b2))
    return Automaton(a.alphabet, a.states + (b1, b2), trans, a.initial, a.table)


def fin_subseteq_to_fin_eq(a: Automaton) -> Automaton:
    """(fin, ⊆) to (fin, =): close the table downward."""
    if a.table:
        check_limit("powerset_members", max(len(f) for f in a.table), "fin-subseteq-to-fin-eq max |F|")
    return a.replace(table=set(chain.from_iterable(_powerset(f) for f in a.table)))


def fin_meets_to_fin_eq(a: Automaton) -> Automaton:
    """(fin, ⊓) to (fin, =): every subset of Q meeting some table member."""
    check_limit("powerset_members", len(a.states), "fin-meets-to-fin-eq |Q|")
    return a.replace(table=[s for s in _powerset(a.states) if any(s & f for f in a.table)])


def inf_meets_to_fin_eq(a: Automaton) -> Automaton:
    """Büchi to (fin, =) over ``Q ∪ Q×Q``.

    The pair ``(q, p)`` is a detour taken on the step ``p -> q``; a run
    accepts under (fin, =) when it takes exactly one detour that it never
    repeats, from a Büchi state ``p`` that is then seen infinitely often.
    If the initial state is itself a Büchi state a fresh initial copy with
    the same outgoing moves into Q is added, so a detour from the initial
    state is only possible at a position > 0 (otherwise ``p`` would be in
    neither fin nor inf and the check "p not in fin" would be vacuous).
    All states are built; the result is complete when ``a`` is.
    """
    check_limit("fin_eq_states", len(a.states), "inf-meets-to-fin-eq |Q|")
    marked = a.sorted_set(_union(a.table))
    pair_names = assign_names(list(product(a.states, a.states)), lambda k: join_name(*k))
    taken = set(a.states) | set(pair_names.values())
    if len(taken) != len(a.states) + len(pair_names):
        raise ValueError("state name collision in inf-meets-to-fin-eq")
    trans = set(a.transitions)
    for p, x, q in a.transitions:
        trans.add((p, x, pair_names[q, p]))
        for p2 in a.states:
            trans.add((pair_names[p, p2], x, q))
    states = list(a.states) + list(pair_names.values())
    initial = a.initial
    if a.initial in marked:
        initial = fresh_name(join_name(a.initial, "init"), taken)
        states.insert(0, initial)
        trans.update((initial, x, q) for (p, x, q) in a.transitions if p == a.initial)
    table = set()
    for p2 in marked:
        for p1 in a.states:
            for f in _powerset(a.states):
                table.add((f - {p2}) | {pair_names[p1, p2]})
    return Automaton(a.alphabet, states, trans, initial, table)


# -- DFA(fin, ⊆) as unions of intersections ---------------------------------

@dataclass(frozen=True)
class Leaf:
    automaton: Automaton
    cond: Condition


@dataclass(frozen=True)
class Union:
    children: tuple


@dataclass(frozen=True)
class Intersection:
    children: tuple


LanguageExpr = (Leaf, Union, Intersection)


def expr_accepts(e, w: LassoWord) -> bool:
    if isinstance(e, Leaf):
        return accepts(e.automaton, e.cond, w)
    if isinstance(e, Union):
        return any(expr_accepts(c, w) for c in e.children)
    if isinstance(e, Intersection):
        return all(expr_accepts(c, w) for c in e.children)
    raise TypeError(f"not a language expression: {e!r}")


def expr_leaves(e):
    if isinstance(e, Leaf):
        yield e
    else:
        for c in e.children:
            yield from expr_leaves(c)


def dfa_fin_subseteq_decompose(a: Automaton) -> Union:
    """(fin, ⊆) on a deterministic automaton as a union over ``S' ⊆ S ⊆ Q``
    with ``S \\ S'`` inside some table member of: run ⊆ S and every state
    of ``S'`` seen infinitely often."""
    if not is_deterministic(a):
        raise PreconditionError("dfa-fin-subseteq-decompose needs a deterministic automaton")
    check_limit("product_states", len(a.states), "dfa-fin-subseteq-decompose |Q|")
    run_sub = Pair(Stat.RUN, Rel.SUBSETEQ)
    terms = []
    for s in _powerset(a.states):
        for s2 in _powerset(a.sorted_set(s)):
            if not any(s - s2 <= f for f in a.table):
                continue
            kids = [Leaf(a.replace(table=[s]), run_sub)]
            kids += [Leaf(a.replace(table=[{q}]), BUCHI) for q in a.sorted_set(s2)]
            terms.append(Intersection(tuple(kids)))
    return Union(tuple(terms))


# -- registry ----------------------------------------------------------------

@dataclass(frozen=True)
class Transform:
    """``deterministic`` / ``complete``: ``"keep"`` if the property carries
    over from input to output, ``"make"`` if the output always has it."""
    name: str
    func: Callable
    sources: tuple
    target: Optional[Condition]
    deterministic: Optional[str] = "keep"
    complete: Optional[str] = "keep"
    needs_cond: bool = False

    def target_for(self, source: Condition) -> Optional[Condition]:
        if self.name == "complement-table":
            return COMPLEMENT_DUALS[source]
        if self.name == "dfa-fin-subseteq-decompose":
            return None
        return source if self.target is None else self.target

    def apply(self, a: Automaton, cond: Condition):
        """Run on ``a`` read under ``cond``; returns ``(result, target_cond)``."""
        if cond not in self.sources:
            allowed = ", ".join(str(c) for c in self.sources)
            raise UnsupportedCondition(f"{self.name} applies to {allowed}, not {cond}")
        out = self.func(a, cond) if self.needs_cond else self.func(a)
        return out, self.target_for(cond)


_P = Pair
TRANSFORMS = {t.name: t for t in [
    Transform("a-to-run-meets", a_to_run_meets, (Named.A,), _P(Stat.RUN, Rel.MEETS)),
    Transform("run-meets-to-a", run_meets_to_a, (_P(Stat.RUN, Rel.MEETS),), Named.A),
    Transform("aprime-to-run-subseteq", aprime_to_run_subseteq, (Named.APRIME,), _P(Stat.RUN, Rel.SUBSETEQ)),
    Transform("run-subseteq-to-aprime", run_subseteq_to_aprime, (_P(Stat.RUN, Rel.SUBSETEQ),), Named.APRIME),
    Transform("complement-table", complement_table, tuple(COMPLEMENT_DUALS), None),
    Transform("add-sink", add_sink, SINK_SAFE, None, complete="make", needs_cond=True),
    Transform("inf-meets-to-L", inf_meets_to_L, (BUCHI,), Named.L),
    Transform("L-to-inf-meets", L_to_inf_meets, (Named.L,), BUCHI),
    Transform("single-accepting-Lprime", single_accepting_Lprime, (Named.LPRIME,), Named.LPRIME),
    Transform("lprime-to-inf-subseteq", lprime_to_inf_subseteq, (Named.LPRIME,), _P(Stat.INF, Rel.SUBSETEQ)),
    Transform("complete-for-fin", complete_for_fin, (_P(Stat.FIN, Rel.SUBSETEQ), _P(Stat.FIN, Rel.EQ)), None,
              complete="make"),
    Transform("fin-subseteq-to-fin-eq", fin_subseteq_to_fin_eq, (_P(Stat.FIN, Rel.SUBSETEQ),), _P(Stat.FIN, Rel.EQ)),
    Transform("fin-meets-to-fin-eq", fin_meets_to_fin_eq, (_P(Stat.FIN, Rel.MEETS),), _P(Stat.FIN, Rel.EQ)),
    Transform("inf-meets-to-fin-eq", inf_meets_to_fin_eq, (BUCHI,), _P(Stat.FIN, Rel.EQ), deterministic=None),
    Transform("dfa-fin-subseteq-decompose", dfa_fin_subseteq_decompose, (_P(Stat.FIN, Rel.SUBSETEQ),), None,
              deterministic=None, complete=None),
]}
