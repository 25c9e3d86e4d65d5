"""Monadic second-order formulas describing automaton languages.

:func:`automaton_formula` writes the closed formula that guesses one set
variable per state (the positions where the run is in that state), forces
them to describe an initial run, and states the acceptance condition with
the per-state formula ``C(X)`` (``X`` is in the statistic of the run).

Formulas render to a parenthesized prefix syntax, and :func:`parse` reads
it back.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .conditions import Condition, Pair, Rel, Stat
from .core import Automaton
from .errors import UnsupportedCondition


@dataclass(frozen=True)
class FOEq:
    x: str
    y: str


@dataclass(frozen=True)
class Succ:
    x: str
    y: str


@dataclass(frozen=True)
class Lt:
    x: str
    y: str


@dataclass(frozen=True)
class Letter:
    a: str
    x: str


@dataclass(frozen=True)
class SetMem:
    X: str
    x: str


@dataclass(frozen=True)
class Not:
    f: object


@dataclass(frozen=True)
class And:
    fs: tuple = ()  # empty conjunction is true

    def __post_init__(self):
        object.__setattr__(self, "fs", tuple(self.fs))


@dataclass(frozen=True)
class Or:
    fs: tuple = ()  # empty disjunction is false

    def __post_init__(self):
        object.__setattr__(self, "fs", tuple(self.fs))


@dataclass(frozen=True)
class Implies:
    f: object
    g: object


@dataclass(frozen=True)
class ExistsFO:
    x: str
    f: object


@dataclass(frozen=True)
class ForallFO:
    x: str
    f: object


@dataclass(frozen=True)
class ExistsSO:
    X: str
    f: object


@dataclass(frozen=True)
class ForallSO:
    X: str
    f: object


_QUANT = (ExistsFO, ForallFO, ExistsSO, ForallSO)


def free_vars(f) -> set:
    if isinstance(f, (FOEq, Succ, Lt)):
        return {f.x, f.y}
    if isinstance(f, Letter):
        return {f.x}
    if isinstance(f, SetMem):
        return {f.X, f.x}
    if isinstance(f, Not):
        return free_vars(f.f)
    if isinstance(f, (And, Or)):
        return set().union(*(free_vars(g) for g in f.fs))
    if isinstance(f, Implies):
        return free_vars(f.f) | free_vars(f.g)
    if isinstance(f, (ExistsFO, ForallFO)):
        return free_vars(f.f) - {f.x}
    if isinstance(f, (ExistsSO, ForallSO)):
        return free_vars(f.f) - {f.X}
    raise TypeError(f"not a formula: {f!r}")


def count_so_quantifiers(f) -> int:
    if isinstance(f, (ExistsSO, ForallSO)):
        return 1 + count_so_quantifiers(f.f)
    if isinstance(f, (ExistsFO, ForallFO, Not)):
        return count_so_quantifiers(f.f)
    if isinstance(f, Implies):
        return count_so_quantifiers(f.f) + count_so_quantifiers(f.g)
    if isinstance(f, (And, Or)):
        return sum(count_so_quantifiers(g) for g in f.fs)
    return 0


def _and(fs):
    fs = list(fs)
    return fs[0] if len(fs) == 1 else And(fs)


def _or(fs):
    fs = list(fs)
    return fs[0] if len(fs) == 1 else Or(fs)


# -- the construction --------------------------------------------------------

def _in_run(X):
    # X holds at some position with a predecessor, i.e. at some index > 0
    return ExistsFO("x", And([ExistsFO("y", Succ("y", "x")), SetMem(X, "x")]))


def _infinitely(X):
    return ForallFO("x", ExistsFO("y", And([Lt("x", "y"), SetMem(X, "y")])))


def c_formula(kind: Stat, X: str):
    """``C(X)``: the state coded by ``X`` belongs to the statistic ``kind``."""
    if kind is Stat.RUN:
        return _in_run(X)
    if kind is Stat.INF:
        return _infinitely(X)
    if kind is Stat.FIN:
        return And([_in_run(X), Not(_infinitely(X))])
    return Not(_infinitely(X))


def cond_formula(kind: Stat, rel: Rel, table, state_vars: dict):
    """The acceptance part; ``state_vars`` maps every state (in state
    order) to its set variable."""
    states = list(state_vars)
    order = {q: i for i, q in enumerate(states)}
    members = sorted((frozenset(f) for f in table), key=lambda f: sorted(order[q] for q in f))
    c = {q: c_formula(kind, state_vars[q]) for q in states}
    out = []
    for f in members:
        inside = [q for q in states if q in f]
        outside = [q for q in states if q not in f]
        if rel is Rel.MEETS:
            out.extend(c[q] for q in inside)
        elif rel is Rel.SUBSETEQ:
            out.append(_and(Not(c[q]) for q in outside))
        else:
            out.append(_and([c[q] for q in inside] + [Not(c[q]) for q in outside]))
    return _or(out)


def automaton_formula(a: Automaton, cond: Condition):
    """Closed formula defining the language of ``a`` under a pair condition."""
    if not isinstance(cond, Pair):
        raise UnsupportedCondition(f"MSO emission covers (stat, rel) pairs only, not {cond}; "
                                   "rewrite the automaton with a transform first")
    xs = {q: f"X{i}" for i, q in enumerate(a.states)}
    disjoint = And([Not(ExistsFO("x", And([SetMem(xs[p], "x"), SetMem(xs[q], "x")])))
                    for p in a.states for q in a.states if p != q])
    idx, sym = a.index, {x: i for i, x in enumerate(a.alphabet)}
    trans = sorted(a.transitions, key=lambda t: (idx[t[0]], sym[t[1]], idx[t[2]]))
    step = ForallFO("x", ForallFO("y", Implies(
        Succ("x", "y"),
        Or([And([SetMem(xs[p], "x"), Letter(x, "x"), SetMem(xs[q], "y")]) for p, x, q in trans]))))
    start = ExistsFO("x", And([Not(ExistsFO("y", Succ("y", "x"))), SetMem(xs[a.initial], "x")]))
    body = And([disjoint, step, start, cond_formula(cond.stat, cond.rel, a.table, xs)])
    for q in reversed(a.states):
        body = ExistsSO(xs[q], body)
    return body


# -- text syntax ---------------------------------------------------------------

_BINARY = {FOEq: "=", Succ: "S", Lt: "<"}
_QNAME = {ExistsFO: "exists1", ForallFO: "forall1", ExistsSO: "exists2", ForallSO: "forall2"}


def render(f) -> str:
    parts = []

    def go(f):
        if type(f) in _BINARY:
            parts.append(f"({_BINARY[type(f)]} {f.x} {f.y})")
        elif isinstance(f, Letter):
            parts.append(f"(letter {f.a} {f.x})")
        elif isinstance(f, SetMem):
            parts.append(f"(in {f.X} {f.x})")
        elif isinstance(f, Not):
            parts.append("(not ")
            go(f.f)
            parts.append(")")
        elif isinstance(f, (And, Or)):
            parts.append("(and" if isinstance(f, And) else "(or")
            for g in f.fs:
                parts.append(" ")
                go(g)
            parts.append(")")
        elif isinstance(f, Implies):
            parts.append("(-> ")
            go(f.f)
            parts.append(" ")
            go(f.g)
            parts.append(")")
        elif isinstance(f, _QUANT):
            var = f.X if isinstance(f, (ExistsSO, ForallSO)) else f.x
            parts.append(f"({_QNAME[type(f)]} {var} ")
            go(f.f)
            parts.append(")")
        else:
            raise TypeError(f"not a formula: {f!r}")

    go(f)
    return "".join(parts)


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse(text: str):
    """Inverse of :func:`render`."""
    toks = _TOKEN.findall(text)
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(toks):
            raise ValueError("unexpected end of formula")
        t = toks[pos]
        pos += 1
        return t

    def expect(t):
        got = take()
        if got != t:
            raise ValueError(f"expected {t!r}, got {got!r} at token {pos - 1}")

    def atom():
        t = take()
        if t in ("(", ")"):
            raise ValueError(f"expected a name, got {t!r} at token {pos - 1}")
        return t

    def go():
        expect("(")
        head = take()
        if head in ("=", "S", "<"):
            cls = {"=": FOEq, "S": Succ, "<": Lt}[head]
            node = cls(atom(), atom())
        elif head == "letter":
            node = Letter(atom(), atom())
        elif head == "in":
            node = SetMem(atom(), atom())
        elif head == "not":
            node = Not(go())
        elif head in ("and", "or"):
            kids = []
            while pos < len(toks) and toks[pos] == "(":
                kids.append(go())
            node = And(kids) if head == "and" else Or(kids)
        elif head == "->":
            node = Implies(go(), go())
        elif head in ("exists1", "forall1", "exists2", "forall2"):
            cls = {v: k for k, v in _QNAME.items()}[head]
            node = cls(atom(), go())
        else:
            raise ValueError(f"unknown head {head!r}")
        expect(")")
        return node

    node = go()
    if pos != len(toks):
        raise ValueError("trailing text after formula")
    return node
