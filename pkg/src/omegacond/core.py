"""Automaton data model, structural predicates and condition-aware trimming."""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable

from .conditions import Condition, Named, Pair, Rel, Stat
from .errors import InvalidAutomaton

TOKEN_RE = re.compile(r"^[^\s{}:#()]+$")

SEP = "·"
SINK = "⊥"


def is_token(text) -> bool:
    return isinstance(text, str) and bool(TOKEN_RE.match(text))


def validate(alphabet, states, transitions, initial, table) -> list[str]:
    """Return every violated invariant (an empty list means the data is valid)."""
    out = []
    alphabet = list(alphabet)
    states = list(states)
    if not alphabet:
        out.append("alphabet is empty")
    for sym in alphabet:
        if not is_token(sym):
            out.append(f"bad symbol token: {sym!r}")
    if len(set(alphabet)) != len(alphabet):
        out.append("duplicate symbols in alphabet")
    if not states:
        out.append("no states")
    for q in states:
        if not is_token(q):
            out.append(f"bad state token: {q!r}")
    if len(set(states)) != len(states):
        out.append("duplicate states")
    qs, sigma = set(states), set(alphabet)
    if initial not in qs:
        out.append(f"initial not in states: {initial!r}")
    for t in transitions:
        try:
            p, x, q = t
        except (TypeError, ValueError):
            out.append(f"malformed transition: {t!r}")
            continue
        if p not in qs:
            out.append(f"transition source not in states: {t!r}")
        if x not in sigma:
            out.append(f"transition symbol not in alphabet: {t!r}")
        if q not in qs:
            out.append(f"transition target not in states: {t!r}")
    for f in table:
        extra = set(f) - qs
        if extra:
            out.append(f"table set not ⊆ Q: {sorted(map(str, f))} (unknown {sorted(map(str, extra))})")
    return out


@dataclass(frozen=True, eq=True)
class Automaton:
    """A finite automaton ``(alphabet, states, transitions, initial, table)``.

    ``table`` is a set of state sets; how it is read depends on the
    acceptance condition the automaton is paired with.
    """

    alphabet: tuple
    states: tuple
    transitions: frozenset
    initial: str
    table: frozenset

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "alphabet", tuple(self.alphabet))
        set_(self, "states", tuple(self.states))
        set_(self, "transitions", frozenset(tuple(t) for t in self.transitions))
        set_(self, "table", frozenset(frozenset(f) for f in self.table))
        problems = validate(self.alphabet, self.states, self.transitions, self.initial, self.table)
        if problems:
            raise InvalidAutomaton(problems)

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash((self.alphabet, self.states, self.transitions, self.initial, self.table))

    @cached_property
    def index(self) -> dict:
        return {q: i for i, q in enumerate(self.states)}

    @cached_property
    def delta(self) -> dict:
        """``(p, x) -> tuple of successors`` in state order; missing keys mean none."""
        d = {}
        for p, x, q in self.transitions:
            d.setdefault((p, x), []).append(q)
        idx = self.index
        return {k: tuple(sorted(v, key=idx.__getitem__)) for k, v in d.items()}

    def successors(self, p, x) -> tuple:
        return self.delta.get((p, x), ())

    def replace(self, **changes) -> "Automaton":
        fields = dict(alphabet=self.alphabet, states=self.states, transitions=self.transitions,
                      initial=self.initial, table=self.table)
        fields.update(changes)
        return Automaton(**fields)

    def sorted_set(self, s: Iterable) -> list:
        return sorted(s, key=self.index.__getitem__)


def is_deterministic(a: Automaton) -> bool:
    return all(len(v) <= 1 for v in a.delta.values())


def is_complete(a: Automaton) -> bool:
    d = a.delta
    return all((p, x) in d for p in a.states for x in a.alphabet)


def reachable(a: Automaton, roots=None) -> list:
    """States reachable from ``roots`` (default: the initial state), BFS order."""
    roots = [a.initial] if roots is None else list(roots)
    seen = dict.fromkeys(roots)
    todo = deque(roots)
    while todo:
        p = todo.popleft()
        for x in a.alphabet:
            for q in a.successors(p, x):
                if q not in seen:
                    seen[q] = None
                    todo.append(q)
    return list(seen)


# -- naming and product exploration -------------------------------------------

def fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def set_name(items, order=None) -> str:
    items = sorted(items, key=order) if order else sorted(items)
    return "[" + ",".join(items) + "]"


def join_name(*parts) -> str:
    return SEP.join(parts)


def assign_names(keys, render: Callable[[Hashable], str]) -> dict:
    """Name each key with ``render``; a name clash between distinct keys is
    a hard error, never a silent merge."""
    names, owner = {}, {}
    for k in keys:
        n = render(k)
        if n in owner and owner[n] != k:
            raise ValueError(f"state name collision on {n!r}")
        owner[n] = k
        names[k] = n
    return names


def explore(alphabet, roots, step):
    """Breadth-first exploration of an implicit automaton.

    ``step(key, sym)`` yields successor keys.  Returns the keys in discovery
    order and the list of ``(key, sym, key)`` transitions.
    """
    order = dict.fromkeys(roots)
    todo = deque(order)
    trans = []
    while todo:
        k = todo.popleft()
        for x in alphabet:
            for k2 in step(k, x):
                trans.append((k, x, k2))
                if k2 not in order:
                    order[k2] = None
                    todo.append(k2)
    return list(order), trans


def materialize(alphabet, keys, trans, initial, table_keys, render) -> Automaton:
    names = assign_names(keys, render)
    return Automaton(
        alphabet=alphabet,
        states=[names[k] for k in keys],
        transitions=[(names[p], x, names[q]) for p, x, q in trans],
        initial=names[initial],
        table=[[names[k] for k in f] for f in table_keys],
    )


# -- trimming -----------------------------------------------------------------

_SENTINEL_CONDS = {Pair(Stat.NINF, Rel.MEETS), Named.APRIME, Named.LPRIME}


def trim_unreachable(a: Automaton, cond: Condition) -> Automaton:
    """Drop states unreachable from the initial state, rewriting the table
    so the language under ``cond`` is unchanged.

    A removed state never occurs in run/inf/fin but always lies in ninf.
    For the conditions where a table set holding a removed state is then
    satisfied by every run ((ninf, meets), Aprime, Lprime) one unreachable
    sentinel is kept, with self-loops only, instead of being removed.
    """
    keep = reachable(a)
    removed = set(a.states) - set(keep)
    if not removed:
        return a
    sentinel = None
    if cond in _SENTINEL_CONDS:
        hit = [s for f in a.table for s in f if s in removed]
        if hit:
            sentinel = min(hit)
    ninf_total = isinstance(cond, Pair) and cond.stat is Stat.NINF and cond.rel is not Rel.MEETS
    new_table = []
    for f in a.table:
        gone = f & removed
        rest = f - removed
        if ninf_total:
            # ninf always contains every removed state
            if gone == removed:
                new_table.append(rest)
        elif not gone:
            new_table.append(f)
        elif sentinel is not None:
            new_table.append(rest | {sentinel})
        elif cond in (Named.A, Named.L):
            continue  # F can no longer be covered
        elif isinstance(cond, Pair) and cond.rel is Rel.EQ:
            continue
        elif isinstance(cond, Pair) and cond.rel is Rel.MEETS and not rest:
            continue
        else:
            new_table.append(rest)
    states = [q for q in a.states if q in set(keep) or q == sentinel]
    kept = set(states)
    trans = [t for t in a.transitions if t[0] in kept and t[2] in kept and t[0] != sentinel]
    if sentinel is not None:
        trans += [(sentinel, x, sentinel) for x in a.alphabet]
    return Automaton(a.alphabet, states, trans, a.initial, new_table)
