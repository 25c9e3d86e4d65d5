"""Exact membership of lasso words.

The initial runs of an automaton over ``u v^omega`` are exactly the infinite
paths from ``(q0, 0)`` in the product of the automaton with the lasso's
position graph (positions ``0 .. |u|+|v|-1``, the last one wrapping to
``|u|``).  Any such path eventually circulates in a strongly connected set
``C`` of product vertices, every vertex of which it visits infinitely often;
so ``inf`` is the state projection of ``C`` and ``run`` is that projection
plus whatever the finite lead-in walk visited.

Strongly connected sets are enumerated by recursive SCC decomposition: every
strongly connected ``C`` with projection ``I`` sits inside an SCC ``D`` of the
product restricted to ``I``-states, and ``proj(D) = I``; the ``(run, inf)``
pairs only depend on the union of those ``D`` for each ``I``.  Lead-in walks are
tracked exhaustively as ``(vertex, visited-state-set)`` pairs.

That enumeration can be large, so :func:`accepts` answers by default with a
goal search instead: for each table member it looks for one run of a fixed
shape, tracking only the states the goal must cover.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import _graph
from .conditions import Condition, Named, Pair, Rel, Stat
from .core import Automaton
from .errors import SizeGuardError, limit
from .words import LassoWord, letter_at


@dataclass(frozen=True)
class RunSummary:
    run_set: frozenset
    inf_set: frozenset


# -- condition evaluation -----------------------------------------------------

def stat_of(kind: Stat, s: RunSummary, all_states) -> frozenset:
    if kind is Stat.RUN:
        return s.run_set
    if kind is Stat.INF:
        return s.inf_set
    if kind is Stat.FIN:
        return s.run_set - s.inf_set
    return frozenset(all_states) - s.inf_set


def _rel(rel: Rel, x: frozenset, f: frozenset) -> bool:
    if rel is Rel.MEETS:
        return bool(x & f)
    if rel is Rel.SUBSETEQ:
        return x <= f
    return x == f


def condition_holds(cond: Condition, s: RunSummary, table, all_states) -> bool:
    if isinstance(cond, Pair):
        x = stat_of(cond.stat, s, all_states)
        return any(_rel(cond.rel, x, frozenset(f)) for f in table)
    if cond is Named.A:
        return any(frozenset(f) <= s.run_set for f in table)
    if cond is Named.APRIME:
        return any(not frozenset(f) <= s.run_set for f in table)
    if cond is Named.L:
        return any(frozenset(f) <= s.inf_set for f in table)
    if cond is Named.LPRIME:
        return any(not frozenset(f) <= s.inf_set for f in table)
    raise TypeError(f"not a condition: {cond!r}")


# -- the product graph ----------------------------------------------------------

class _Product:
    """Reachable part of automaton x lasso positions.  Vertex ids are ints;
    ``state[v]`` is the automaton state index, ``pos[v]`` the lasso position."""

    def __init__(self, a: Automaton, w: LassoWord):
        bad = w.symbols() - set(a.alphabet)
        if bad:
            raise ValueError(f"symbols not in alphabet: {sorted(bad)}")
        n, ls = len(w), len(w.stem)
        letters = w.stem + w.cycle
        idx = a.index
        delta = a.delta
        ids = {}
        self.state, self.pos, self.succ = [], [], []

        def vid(qi, p):
            key = qi * n + p
            v = ids.get(key)
            if v is None:
                v = ids[key] = len(self.state)
                self.state.append(qi)
                self.pos.append(p)
                self.succ.append(None)
            return v

        states = a.states
        self.start = vid(idx[a.initial], 0)
        todo = deque([self.start])
        while todo:
            v = todo.popleft()
            qi, p = self.state[v], self.pos[v]
            nxt = p + 1 if p + 1 < n else ls
            out = []
            for q2 in delta.get((states[qi], letters[p]), ()):
                before = len(self.state)
                u = vid(idx[q2], nxt)
                if len(self.state) > before:
                    todo.append(u)
                out.append(u)
            self.succ[v] = out
        self.size = len(self.state)

    def inf_components(self) -> dict:
        """``inf-mask I -> list of SCCs`` of the product restricted to
        I-states whose projection is exactly I.

        Every strongly connected set with projection I lies inside one of
        these components, so the keys are exactly the realizable inf-sets.
        Found by decomposing on state sets: an SCC with a smaller
        projection J is explored again as J and as J minus each state.
        """
        state, succ = self.state, self.succ
        out, seen = {}, set()
        stack = [self.mask(range(self.size))]
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            verts = [v for v in range(self.size) if i >> state[v] & 1]
            for c in _graph.nontrivial_sccs(succ, verts):
                j = self.mask(c)
                if j == i:
                    out.setdefault(i, []).append(c)
                else:
                    stack.append(j)
                bits = [1 << k for k in range(j.bit_length()) if j >> k & 1]
                if len(bits) > 1:
                    stack.extend(j & ~b for b in bits)
        return out

    def mask(self, vertices) -> int:
        m = 0
        for v in vertices:
            m |= 1 << self.state[v]
        return m

    def lead_ins(self):
        """``vertex -> set of visited masks`` over all finite initial walks
        (the state at index 0 is not counted)."""
        cap = limit("oracle_pairs")
        state, succ = self.state, self.succ
        seen = {self.start: {0}}
        todo = deque([(self.start, 0)])
        count = 1
        while todo:
            v, m = todo.popleft()
            for u in succ[v]:
                m2 = m | (1 << state[u])
                ms = seen.setdefault(u, set())
                if m2 not in ms:
                    ms.add(m2)
                    count += 1
                    if count > cap:
                        raise SizeGuardError(f"membership oracle exceeds {cap} tracked pairs")
                    todo.append((u, m2))
        return seen


def _by_inf(prod: "_Product") -> dict:
    """inf-mask -> vertices lying on some strongly connected set with that
    projection."""
    return {i: set().union(*cs) for i, cs in prod.inf_components().items()}


def _mask_summaries(a: Automaton, w: LassoWord):
    prod = _Product(a, w)
    leads = prod.lead_ins()
    out = set()
    for i, verts in _by_inf(prod).items():
        ms = set().union(*(leads.get(v, ()) for v in verts))
        out.update((m | i, i) for m in ms)
    return out


def _unmask(a: Automaton, m: int) -> frozenset:
    return frozenset(q for k, q in enumerate(a.states) if m >> k & 1)


def run_summaries(a: Automaton, w: LassoWord) -> set:
    """All ``(run, inf)`` pairs realized by initial runs of ``a`` over ``w``."""
    return {RunSummary(_unmask(a, r), _unmask(a, i)) for r, i in _mask_summaries(a, w)}


def accepts(a: Automaton, cond: Condition, w: LassoWord, *, fast: bool = True) -> bool:
    """Whether some initial run of ``a`` over ``w`` satisfies ``cond``.

    The default route asks, per table member, for one run of a specific
    shape (see :func:`_goals`); ``fast=False`` enumerates every realizable
    ``(run, inf)`` pair through :func:`run_summaries` instead.  The two
    routes share only the product graph.
    """
    if not a.table:
        _Product(a, w)  # still reject foreign symbols
        return False
    if not fast:
        return any(condition_holds(cond, s, a.table, a.states) for s in run_summaries(a, w))
    prod = _Product(a, w)
    search = _Search(prod)
    return any(search.exists(*g) for g in _goals(cond, a))


def _goals(cond: Condition, a: Automaton):
    """Goals ``(lead, cycle, cover, ok)`` whose disjunction is ``cond``.

    A goal asks for an initial run that ends in a maximal strongly connected
    part ``D`` of the product restricted to ``cycle`` states with
    ``ok(proj(D))``, whose lead-in only steps on ``lead | proj(D)`` states,
    and whose run set covers ``cover``.  Each case is monotone in the cycle
    (growing it to the whole of ``D`` never breaks the goal), which is why
    maximal parts suffice.
    """
    idx = a.index
    full = (1 << len(a.states)) - 1
    members = sorted({sum(1 << idx[q] for q in f) for f in a.table})
    union = 0
    for f in members:
        union |= f
    bits = [1 << k for k in range(len(a.states)) if union >> k & 1]
    yes = None
    if isinstance(cond, Pair):
        st, rel = cond.stat, cond.rel
        if rel is Rel.MEETS:
            if st is Stat.INF:
                yield full, full, 0, (lambda p: bool(p & union))
            for b in bits:
                if st is Stat.RUN:
                    yield full, full, b, yes
                elif st is Stat.FIN:
                    yield full, full & ~b, b, yes
                elif st is Stat.NINF:
                    yield full, full & ~b, 0, yes
            return
        for f in members:
            g = full & ~f
            if st is Stat.RUN:
                yield f, f, f if rel is Rel.EQ else 0, yes
            elif st is Stat.FIN:
                if rel is Rel.SUBSETEQ:
                    yield f, full, 0, yes
                else:
                    yield f, g, f, yes
            elif st is Stat.INF:
                yield full, f, 0, (yes if rel is Rel.SUBSETEQ else (lambda p, f=f: p == f))
            elif rel is Rel.SUBSETEQ:
                yield full, full, 0, (lambda p, g=g: p & g == g)
            else:
                yield full, g, 0, (lambda p, g=g: p == g)
        return
    if cond is Named.A:
        for f in members:
            yield full, full, f, yes
    elif cond is Named.APRIME:
        for b in bits:
            yield full & ~b, full & ~b, 0, yes
    elif cond is Named.L:
        for f in members:
            yield full, full, 0, (lambda p, f=f: p & f == f)
    elif cond is Named.LPRIME:
        for b in bits:
            yield full, full & ~b, 0, yes
    else:
        raise TypeError(f"not a condition: {cond!r}")


class _Search:
    """Goal checks over one product graph; SCCs are cached per cycle mask."""

    def __init__(self, prod: "_Product"):
        self.prod = prod
        self._parts = {}

    def parts(self, cycle: int):
        got = self._parts.get(cycle)
        if got is None:
            p = self.prod
            verts = [v for v in range(p.size) if cycle >> p.state[v] & 1]
            got = self._parts[cycle] = [(set(c), p.mask(c)) for c in _graph.nontrivial_sccs(p.succ, verts)]
        return got

    def exists(self, lead: int, cycle: int, cover: int, ok) -> bool:
        p = self.prod
        state, succ = p.state, p.succ
        for d, proj in self.parts(cycle):
            if ok is not None and not ok(proj):
                continue
            allowed = lead | proj
            need = cover & ~proj
            seen = {(p.start, 0)}
            todo = deque(seen)
            while todo:
                v, m = todo.popleft()
                if v in d and m == need:
                    return True
                for u in succ[v]:
                    b = 1 << state[u]
                    if not allowed & b:
                        continue
                    key = (u, m | (b & need))
                    if key not in seen:
                        seen.add(key)
                        todo.append(key)
        return False


# -- explicit witnesses ---------------------------------------------------------

def witness_walk(a: Automaton, w: LassoWord, s: RunSummary):
    """An explicit run realizing ``s``: ``(prefix, loop)`` state lists such
    that ``prefix + loop + loop + ...`` is an initial path labelled ``w``.

    ``prefix`` starts with the initial state (index 0) and ends where the
    loop closes; ``len(loop)`` is a multiple of ``|w.cycle|``.
    Returns None when ``s`` is not realizable.
    """
    prod = _Product(a, w)
    idx = a.index
    want_r = sum(1 << idx[q] for q in s.run_set)
    want_i = sum(1 << idx[q] for q in s.inf_set)
    names = a.states
    for d in prod.inf_components().get(want_i, ()):
        d = set(d)
        # shortest lead-in ending in d whose visited set completes run_set
        parent = {(prod.start, 0): None}
        todo = deque([(prod.start, 0)])
        hit = None
        while todo:
            v, m = todo.popleft()
            if v in d and m | want_i == want_r:
                hit = (v, m)
                break
            for u in prod.succ[v]:
                key = (u, m | (1 << prod.state[u]))
                if key not in parent:
                    parent[key] = (v, m)
                    todo.append(key)
        if hit is None:
            continue
        chain = [hit]
        while parent[chain[-1]] is not None:
            chain.append(parent[chain[-1]])
        lead = [v for v, _ in reversed(chain)]
        loop = _covering_loop(prod.succ, lead[-1], d)
        return ([names[prod.state[v]] for v in lead], [names[prod.state[v]] for v in loop])
    return None


def _covering_loop(succ, v, d):
    """A closed walk from ``v`` back to ``v`` inside ``d`` visiting all of ``d``."""
    walk, cur = [], v
    remaining = set(d)
    for t in sorted(d):
        if t not in remaining:
            continue
        path = _graph.shortest_path(succ, cur, t, allowed=d)
        walk += path
        remaining.difference_update(path)
        cur = t
    if cur != v or not walk:
        walk += _graph.shortest_path(succ, cur, v, allowed=d)
    return walk


def replay(a: Automaton, w: LassoWord, prefix, loop, repeats: int = 2):
    """Check ``prefix + loop^repeats`` is a path of ``a`` labelled by ``w`` and
    return the statistics it exhibits as a RunSummary."""
    path = list(prefix) + list(loop) * repeats
    if path[0] != a.initial:
        raise AssertionError("walk does not start at the initial state")
    for i in range(len(path) - 1):
        if path[i + 1] not in a.successors(path[i], letter_at(w, i)):
            raise AssertionError(f"step {i} is not a transition")
    return RunSummary(frozenset(path[1:]), frozenset(loop))
