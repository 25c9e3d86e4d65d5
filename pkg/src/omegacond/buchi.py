"""Translation of every condition to Büchi acceptance, emptiness, and
bounded language equivalence.

The route is condition -> Muller -> Büchi.  The Muller step tracks the
visited set: in the product over ``Q x P(Q)`` the second component of an
infinite run stabilizes to ``run(p)``, so its inf-set has the form
``{(q, V) : q in I}`` for the run's ``(run, inf) = (V, I)``.  Only such
coherent ``(V, I)`` pairs (``I`` nonempty, ``I ⊆ V``) can be inf-sets of the
product, so listing the accepting ones is enough.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import chain, combinations
from typing import Optional

from . import _graph
from .conditions import BUCHI, MULLER, Condition
from .core import Automaton, assign_names, explore, join_name, reachable, set_name
from .errors import PreconditionError, check_limit
from .semantics import RunSummary, accepts, condition_holds
from .words import LassoWord, enumerate_lassos, normalize


def _subsets(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def condition_to_muller(a: Automaton, cond: Condition):
    """Visited-set product of ``a`` and the Muller table accepting exactly
    the language of ``a`` under ``cond``.

    Returns ``(product, table)``; the product also carries ``table`` as its
    own acceptance table, to be read under (inf, =).
    """
    check_limit("product_states", len(a.states), "condition-to-muller |Q|")
    order = a.index.__getitem__

    def step(k, x):
        p, s = k
        return [(q, s | {q}) for q in a.successors(p, x)]

    root = (a.initial, frozenset())
    keys, trans = explore(a.alphabet, [root], step)
    names = assign_names(keys, lambda k: join_name(k[0], set_name(k[1], order)))
    present = set(keys)
    table = set()
    for v in _subsets(a.states):
        for i in _subsets(a.sorted_set(v)):
            if not i:
                continue
            entry = [(q, v) for q in i]
            if not all(k in present for k in entry):
                continue  # not an inf-set of the product
            if condition_holds(cond, RunSummary(v, i), a.table, a.states):
                table.add(frozenset(names[k] for k in entry))
    prod = Automaton(a.alphabet, [names[k] for k in keys],
                     [(names[p], x, names[q]) for p, x, q in trans], names[root], table)
    return prod, frozenset(table)


def muller_to_buchi(a: Automaton, m) -> Automaton:
    """Breakpoint construction.

    Runs start in a copy of ``a``; on entering a state of a guessed table
    member ``M`` they may jump to ``(q, M, {q})`` and from then on must stay
    inside ``M``, collecting visited states in ``K``.  When ``K = M`` the
    state is accepting and ``K`` restarts from the next state.  Only the
    reachable part is built; the table is the single set of accepting
    states (possibly empty).
    """
    members = sorted((frozenset(f) for f in m), key=lambda f: sorted(a.index[q] for q in f))
    if members:
        check_limit("powerset_members", max(len(f) for f in members), "muller-to-buchi max |M|")

    def step(k, x):
        out = []
        if k[0] == "Q":
            for q in a.successors(k[1], x):
                out.append(("Q", q))
                out.extend(("M", q, j, frozenset([q])) for j, mm in enumerate(members) if q in mm)
        else:
            _, p, j, kk = k
            mm = members[j]
            for q in a.successors(p, x):
                if q in mm:
                    out.append(("M", q, j, frozenset([q]) if kk == mm else kk | {q}))
        return out

    root = ("Q", a.initial)
    keys, trans = explore(a.alphabet, [root], step)
    order = a.index.__getitem__

    def render(k):
        if k[0] == "Q":
            return k[1]
        return join_name(k[1], f"M{k[2]}", set_name(k[3], order))

    names = assign_names(keys, render)
    acc = [names[k] for k in keys if k[0] == "M" and k[3] == members[k[2]]]
    return Automaton(a.alphabet, [names[k] for k in keys],
                     [(names[p], x, names[q]) for p, x, q in trans], names[root], [acc])


def to_buchi(a: Automaton, cond: Condition) -> Automaton:
    """An automaton accepting the language of ``(a, cond)`` under (inf, ⊓)
    with a single-set table."""
    prod, m = condition_to_muller(a, cond)
    return muller_to_buchi(prod, m)


def as_buchi(a: Automaton, cond: Condition) -> Automaton:
    """Single-set Büchi form: merge a multi-set (inf, ⊓) table, otherwise
    go through :func:`to_buchi`."""
    if cond == BUCHI:
        if len(a.table) == 1:
            return a
        return a.replace(table=[frozenset().union(*a.table)] if a.table else [frozenset()])
    return to_buchi(a, cond)


# -- emptiness ---------------------------------------------------------------

@dataclass(frozen=True)
class EmptinessReport:
    empty: bool
    witness: Optional[LassoWord] = None


def _labelled_path(a: Automaton, start, goal, allowed=None):
    """Shortest nonempty labelled path ``start -> goal``: (letters, states)."""
    parent = {}
    todo = deque()

    def push(p, x, q):
        if (allowed is None or q in allowed) and q not in parent:
            parent[q] = (p, x)
            todo.append(q)

    for x in a.alphabet:
        for q in a.successors(start, x):
            push(None, x, q)
    while todo:
        v = todo.popleft()
        if v == goal:
            letters, states = [], [v]
            while True:
                p, x = parent[states[-1]]
                letters.append(x)
                if p is None:
                    break
                states.append(p)
            return letters[::-1], states[::-1]
        for x in a.alphabet:
            for q in a.successors(v, x):
                push(v, x, q)
    return None


def is_empty(a: Automaton) -> EmptinessReport:
    """Emptiness of a Büchi automaton (single-set table, read under (inf, ⊓)).

    Nonempty iff some accepting state is reachable and lies on a cycle.
    The witness follows a shortest path to the closest such state (ties
    broken by breadth-first order) and then a shortest cycle through it.
    """
    if len(a.table) != 1:
        raise PreconditionError("emptiness check needs a Büchi table with exactly one set")
    (acc,) = a.table
    order = reachable(a)
    idx = {q: i for i, q in enumerate(order)}
    succ = [sorted({idx[q] for x in a.alphabet for q in a.successors(p, x)}) for p in order]
    on_cycle = set()
    for comp in _graph.nontrivial_sccs(succ, range(len(order))):
        on_cycle.update(order[v] for v in comp)
    target = next((q for q in order if q in acc and q in on_cycle), None)
    if target is None:
        return EmptinessReport(True)
    if target == a.initial:
        stem = []
    else:
        stem, _ = _labelled_path(a, a.initial, target)
    comp = next(c for c in _graph.sccs(succ, range(len(order))) if idx[target] in c)
    cycle, _ = _labelled_path(a, target, target, allowed={order[v] for v in comp})
    return EmptinessReport(False, normalize(stem, cycle))


# -- bounded equivalence -------------------------------------------------------

@dataclass(frozen=True)
class Equal:
    stem_max: int
    cycle_max: int

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Counterexample:
    word: LassoWord
    in1: bool
    in2: bool

    def __bool__(self):
        return False


def bounded_equiv(a1: Automaton, c1: Condition, a2: Automaton, c2: Condition,
                  stem_max: int, cycle_max: int):
    """Compare two languages on every canonical lasso within the bounds;
    the first disagreement in enumeration order is reported."""
    if tuple(a1.alphabet) != tuple(a2.alphabet) and set(a1.alphabet) != set(a2.alphabet):
        raise ValueError("automata have different alphabets")
    for w in enumerate_lassos(a1.alphabet, stem_max, cycle_max):
        x, y = accepts(a1, c1, w), accepts(a2, c2, w)
        if x != y:
            return Counterexample(w, x, y)
    return Equal(stem_max, cycle_max)


def muller_accepts(a: Automaton, m, w: LassoWord) -> bool:
    """Direct Muller membership: some run's inf-set is a member of ``m``."""
    return accepts(a.replace(table=m), MULLER, w)
