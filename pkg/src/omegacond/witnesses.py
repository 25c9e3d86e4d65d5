"""The separating example automata and direct predicates for their languages.

========  =========================  ===========  =============
figure    language                   condition    shape
========  =========================  ===========  =============
fig2      (a+b)*a^ω                  L'           CDFA
fig3      ab*a(a+b)^ω                L'           DFA
fig4      (a+b)*ba^ω                 L'           CFA
fig5      a(a*b)^ω + b(a+b)*a^ω      (fin, =)     CDFA
========  =========================  ===========  =============
"""
from __future__ import annotations

from .buchi import Counterexample, Equal
from .conditions import Named, Pair, Rel, Stat
from .core import Automaton
from .semantics import accepts
from .words import LassoWord, enumerate_lassos, letter_at, normalize

AB = ("a", "b")


def _edges(spec: str):
    """``"q0 a,b q1; ..."`` -> transition triples."""
    out = []
    for part in spec.split(";"):
        p, xs, q = part.split()
        out += [(p, x, q) for x in xs.split(",")]
    return out


FIGURES = {
    "fig2": (Automaton(AB, ["q0", "q1"], _edges("q0 a q0; q0 b q1; q1 a q0; q1 b q1"), "q0", [{"q1"}]),
             Named.LPRIME),
    "fig3": (Automaton(AB, ["q0", "q1", "q2"], _edges("q0 a q1; q1 b q1; q1 a q2; q2 a,b q2"), "q0", [{"q1"}]),
             Named.LPRIME),
    # q0 loops on a and b and also moves to q1 on b
    "fig4": (Automaton(AB, ["q0", "q1"], _edges("q0 a,b q0; q0 b q1; q1 b q0; q1 a q1"), "q0", [{"q0"}]),
             Named.LPRIME),
    "fig5": (Automaton(AB, [f"q{i}" for i in range(6)],
                       _edges("q0 a q1; q0 b q3; q1 a q2; q1 b q1; q2 b q1; q2 a q2; "
                              "q3 a,b q4; q4 a q5; q4 b q4; q5 b q4; q5 a q5"),
                       "q0", [set(), {"q2"}, {"q3", "q4"}]),
             Pair(Stat.FIN, Rel.EQ)),
}

FIGURE_LANGUAGE = {"fig2": "L1", "fig3": "L2", "fig4": "L4", "fig5": "L5"}


def figure_automaton(fid: str):
    """``(automaton, condition)`` for ``fig2`` .. ``fig5``."""
    try:
        return FIGURES[fid]
    except KeyError:
        raise ValueError(f"unknown figure {fid!r}; expected one of {', '.join(FIGURES)}") from None


def _only_a(cycle) -> bool:
    return set(cycle) == {"a"}


def language_predicate(lid: str, w: LassoWord) -> bool:
    bad = w.symbols() - set(AB)
    if bad:
        raise ValueError(f"symbols outside {{a,b}}: {sorted(bad)}")
    w = normalize(w)
    first = letter_at(w, 0)
    if lid == "L1":  # (a+b)*a^ω
        return _only_a(w.cycle)
    if lid == "L2":  # ab*a(a+b)^ω
        if first != "a":
            return False
        # positions 1 .. |u|+|v| contain a whole period of the cycle, so
        # if no a shows up there none ever does
        for i in range(1, len(w) + 1):
            if letter_at(w, i) == "a":
                return True
        return False
    if lid == "L3":  # b*ab*a(a+b)^ω: at least two a's
        return "a" in w.cycle or w.stem.count("a") >= 2
    if lid == "L4":  # (a+b)*ba^ω
        return _only_a(w.cycle) and "b" in w.stem
    if lid == "L5":  # a(a*b)^ω + b(a+b)*a^ω
        return (first == "a" and "b" in w.cycle) or (first == "b" and _only_a(w.cycle))
    raise ValueError(f"unknown language {lid!r}")


def verify_figure(fid: str, stem_max: int = 4, cycle_max: int = 4):
    """Compare the figure's automaton with its language predicate on every
    canonical lasso within the bounds (``in1`` is the automaton's answer)."""
    if stem_max < 1 or cycle_max < 1:
        raise ValueError("bounds must be at least 1")
    a, cond = figure_automaton(fid)
    lid = FIGURE_LANGUAGE[fid]
    for w in enumerate_lassos(AB, stem_max, cycle_max):
        x, y = accepts(a, cond, w), language_predicate(lid, w)
        if x != y:
            return Counterexample(w, x, y)
    return Equal(stem_max, cycle_max)
