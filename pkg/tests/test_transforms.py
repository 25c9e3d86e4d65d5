import random

import pytest
from hypothesis import given

from omegacond.conditions import BUCHI, Named, Pair, Rel, Stat
from omegacond.core import SINK, Automaton, is_complete, is_deterministic
from omegacond.errors import PreconditionError, UnsupportedCondition
from omegacond.semantics import accepts
from omegacond.transforms import (COMPLEMENT_DUALS, SAME_TABLE_DUALS, TRANSFORMS, Intersection, Leaf, Union,
                                  L_to_inf_meets, a_to_run_meets, add_sink, aprime_to_run_subseteq,
                                  complement_table, complete_for_fin, dfa_fin_subseteq_decompose, expr_accepts,
                                  expr_leaves, fin_meets_to_fin_eq, fin_subseteq_to_fin_eq, inf_meets_to_L,
                                  inf_meets_to_fin_eq, lprime_to_inf_subseteq, run_meets_to_a,
                                  run_subseteq_to_aprime, single_accepting_Lprime)
from omegacond.witnesses import FIGURES
from omegacond.words import LassoWord, enumerate_lassos

import oracle
from strategies import automata, one_state

fs = frozenset
AB = ("a", "b")
RUN_MEETS, RUN_SUB = Pair(Stat.RUN, Rel.MEETS), Pair(Stat.RUN, Rel.SUBSETEQ)
FIN_SUB, FIN_EQ, FIN_MEETS = Pair(Stat.FIN, Rel.SUBSETEQ), Pair(Stat.FIN, Rel.EQ), Pair(Stat.FIN, Rel.MEETS)
INF_SUB, NINF_MEETS = Pair(Stat.INF, Rel.SUBSETEQ), Pair(Stat.NINF, Rel.MEETS)
A_OMEGA = LassoWord((), ("a",))


def T(*sets):
    return {fs(s) for s in sets}


def two_states(table):
    return Automaton(AB, ["q0", "q1"], [("q0", "a", "q1"), ("q1", "a", "q0"), ("q1", "b", "q1")], "q0", table)


def same_language(a, c, b, d, bound=3):
    for w in enumerate_lassos(AB, bound, bound):
        if accepts(a, c, w) != accepts(b, d, w):
            return w
    return None


def test_a_to_run_meets_examples():
    a = one_state()
    out = a_to_run_meets(a)
    assert accepts(out, RUN_MEETS, A_OMEGA) and oracle.accepts(a, Named.A, A_OMEGA)
    fig2 = FIGURES["fig2"][0]
    assert len(a_to_run_meets(fig2).states) <= 2 * 4
    empty = a_to_run_meets(fig2.replace(table=[]))
    assert empty.table == set()
    assert same_language(fig2.replace(table=[]), Named.A, empty, RUN_MEETS) is None


def test_run_meets_to_a_examples():
    assert run_meets_to_a(two_states([{"q0", "q1"}])).table == T({"q0"}, {"q1"})
    assert run_meets_to_a(two_states([])).table == set()


def test_aprime_to_run_subseteq_examples():
    a = two_states([set()])
    out = aprime_to_run_subseteq(a)
    assert not any(accepts(out, RUN_SUB, w) for w in enumerate_lassos(AB, 3, 3))
    # a table member on an unreachable state is never covered
    dead = Automaton(AB, ["q0", "q1"], [("q0", "a", "q0")], "q0", [{"q1"}])
    out = aprime_to_run_subseteq(dead)
    for w in enumerate_lassos(AB, 3, 3):
        assert accepts(out, RUN_SUB, w) == oracle.accepts(dead, Named.APRIME, w) == (set(w.symbols()) == {"a"})


def test_run_subseteq_to_aprime_examples():
    a = two_states([{"q0", "q1"}])
    out = run_subseteq_to_aprime(a)
    assert out.table == {fs([SINK])}
    for w in enumerate_lassos(AB, 3, 3):
        assert accepts(out, Named.APRIME, w) == oracle.accepts(a, RUN_SUB, w)
    empty = run_subseteq_to_aprime(one_state(table=[]))
    assert not any(accepts(empty, Named.APRIME, w) for w in enumerate_lassos(AB, 3, 3))


def test_complement_table_examples():
    a = two_states([{"q1"}])
    assert complement_table(a).table == T({"q0"})
    assert complement_table(complement_table(a)) == a


def test_lprime_duality_is_same_table():
    fig2 = FIGURES["fig2"][0]
    assert same_language(fig2, Named.LPRIME, fig2, NINF_MEETS, 4) is None
    assert SAME_TABLE_DUALS[Named.LPRIME] == NINF_MEETS
    # complementing the table breaks it: a^ω is L'-accepted but inf = {q0}
    assert Named.LPRIME not in COMPLEMENT_DUALS
    assert accepts(fig2, Named.LPRIME, A_OMEGA)
    assert not accepts(complement_table(fig2), NINF_MEETS, A_OMEGA)


def test_add_sink_examples():
    fig3 = FIGURES["fig3"][0]
    out = add_sink(fig3, Named.L)
    assert is_complete(out) and len(out.states) == 4
    assert same_language(fig3, Named.L, out, Named.L, 4) is None
    fig2 = FIGURES["fig2"][0]
    assert add_sink(fig2, BUCHI) is fig2
    with pytest.raises(UnsupportedCondition):
        add_sink(fig3, Pair(Stat.NINF, Rel.EQ))


def test_add_sink_refuses_lprime_because_it_changes_the_language():
    fig3 = FIGURES["fig3"][0]
    with pytest.raises(UnsupportedCondition):
        add_sink(fig3, Named.LPRIME)
    # what a sink would do: b^ω gets a run with inf = {sink}, and {q1} ⊄ inf
    naive = Automaton(AB, fig3.states + ("s",), set(fig3.transitions) | {("q0", "b", "s"), ("q2", "b", "q2")}
                      | {("s", x, "s") for x in AB}, "q0", fig3.table)
    b_omega = LassoWord((), ("b",))
    assert not accepts(fig3, Named.LPRIME, b_omega)
    assert accepts(naive, Named.LPRIME, b_omega)


def test_add_sink_L_with_empty_member():
    a = Automaton(AB, ["q0"], [("q0", "a", "q0")], "q0", [set()])
    out = add_sink(a, Named.L)
    assert same_language(a, Named.L, out, Named.L) is None


def test_inf_meets_to_L_examples():
    assert inf_meets_to_L(two_states([{"q0", "q1"}])).table == T({"q0"}, {"q1"})
    assert inf_meets_to_L(two_states([])).table == set()


def test_L_to_inf_meets_examples():
    cdfa = FIGURES["fig2"][0].replace(table=[{"q1"}])
    out = L_to_inf_meets(cdfa)
    assert same_language(cdfa, Named.L, out, BUCHI) is None
    every = L_to_inf_meets(cdfa.replace(table=[set()]))
    assert all(accepts(every, BUCHI, w) for w in enumerate_lassos(AB, 3, 3))
    with pytest.raises(PreconditionError):
        L_to_inf_meets(FIGURES["fig3"][0])


def test_L_to_inf_meets_keeps_cdfa():
    for a in [FIGURES["fig2"][0].replace(table=[{"q0", "q1"}, {"q1"}])]:
        out = L_to_inf_meets(a)
        assert is_deterministic(out) and is_complete(out)
        assert same_language(a, Named.L, out, BUCHI, 4) is None


def test_single_accepting_Lprime_examples():
    out = single_accepting_Lprime(two_states([]))
    assert len(out.states) == 1
    assert not any(accepts(out, Named.LPRIME, w) for w in enumerate_lassos(AB, 3, 3))
    fig2 = FIGURES["fig2"][0]
    out = single_accepting_Lprime(fig2)
    assert len(out.table) == 1 and all(len(f) == 1 for f in out.table)
    assert same_language(fig2, Named.LPRIME, out, Named.LPRIME, 4) is None
    assert single_accepting_Lprime(two_states([set()])).table == {fs([SINK])}


def test_lprime_to_inf_subseteq_examples():
    assert lprime_to_inf_subseteq(two_states([{"q1"}])).table == T({"q0"})
    fig2 = FIGURES["fig2"][0]
    assert same_language(fig2, Named.LPRIME, lprime_to_inf_subseteq(fig2), INF_SUB, 4) is None
    with pytest.raises(PreconditionError):
        lprime_to_inf_subseteq(two_states([{"q0"}, {"q1"}]))


def test_complete_for_fin_examples():
    fig3 = FIGURES["fig3"][0]
    out = complete_for_fin(fig3)
    assert len(out.states) == 5 and is_complete(out) and is_deterministic(out)
    assert same_language(fig3, FIN_SUB, out, FIN_SUB, 4) is None
    assert not accepts(out, FIN_SUB, LassoWord((), ("b",)))
    fig2 = FIGURES["fig2"][0]
    assert complete_for_fin(fig2) is fig2


def test_fin_table_rewrites():
    assert fin_subseteq_to_fin_eq(two_states([{"q0", "q1"}])).table == T((), {"q0"}, {"q1"}, {"q0", "q1"})
    assert fin_subseteq_to_fin_eq(two_states([set()])).table == T(())
    assert fin_meets_to_fin_eq(two_states([{"q0"}])).table == T({"q0"}, {"q0", "q1"})
    assert fin_meets_to_fin_eq(two_states([])).table == set()


def test_inf_meets_to_fin_eq_examples():
    a = one_state()
    out = inf_meets_to_fin_eq(a)
    assert accepts(out, FIN_EQ, A_OMEGA)
    # Q ∪ Q×Q, plus a fresh initial copy because q0 is accepting
    assert len(out.states) == 1 + 1 + 1
    b = two_states([{"q1"}])
    assert len(inf_meets_to_fin_eq(b).states) == 2 + 4
    assert same_language(b, BUCHI, inf_meets_to_fin_eq(b), FIN_EQ) is None


def test_initial_copy_is_needed():
    # without it, b^ω on q0 -b-> q1 -b-> q1 would be accepted through the
    # detour (q1, q0) even though q0 is never seen again
    a = Automaton(AB, ["q0", "q1"], [("q0", "b", "q1"), ("q1", "b", "q1"), ("q0", "a", "q0")], "q0", [{"q0"}])
    out = inf_meets_to_fin_eq(a)
    assert not accepts(out, FIN_EQ, LassoWord((), ("b",)))
    assert same_language(a, BUCHI, out, FIN_EQ) is None


def test_decompose_examples():
    a = Automaton(AB, ["q0"], [("q0", "a", "q0")], "q0", [set()])
    e = dfa_fin_subseteq_decompose(a)
    assert expr_accepts(e, A_OMEGA) == accepts(a, FIN_SUB, A_OMEGA) is True
    n = len(a.states)
    assert sum(1 for _ in expr_leaves(e)) <= 3 ** n * (n + 1)
    with pytest.raises(PreconditionError):
        dfa_fin_subseteq_decompose(FIGURES["fig4"][0])


def test_expr_accepts_examples():
    fig2 = FIGURES["fig2"][0]
    assert expr_accepts(Union((Leaf(fig2, Named.LPRIME),)), A_OMEGA)
    dead = Leaf(fig2.replace(table=[]), BUCHI)
    assert not expr_accepts(Intersection((Leaf(fig2, Named.LPRIME), dead)), A_OMEGA)
    assert not expr_accepts(Union(()), A_OMEGA)
    assert expr_accepts(Intersection(()), A_OMEGA)


def test_registry_names_and_refusals():
    assert list(TRANSFORMS) == [
        "a-to-run-meets", "run-meets-to-a", "aprime-to-run-subseteq", "run-subseteq-to-aprime",
        "complement-table", "add-sink", "inf-meets-to-L", "L-to-inf-meets", "single-accepting-Lprime",
        "lprime-to-inf-subseteq", "complete-for-fin", "fin-subseteq-to-fin-eq", "fin-meets-to-fin-eq",
        "inf-meets-to-fin-eq", "dfa-fin-subseteq-decompose"]
    with pytest.raises(UnsupportedCondition):
        TRANSFORMS["run-meets-to-a"].apply(two_states([]), BUCHI)
    out, target = TRANSFORMS["complement-table"].apply(two_states([{"q1"}]), Named.L)
    assert target == Pair(Stat.NINF, Rel.SUBSETEQ)


# -- randomized, against the naive oracle -------------------------------------

def _check(name, a, bound=2):
    t = TRANSFORMS[name]
    for src in t.sources:
        out, tgt = t.apply(a, src)
        for w in enumerate_lassos(AB, bound, bound):
            got = expr_accepts(out, w) if tgt is None else accepts(out, tgt, w)
            assert got == oracle.accepts(a, src, w), (name, src, w)


@given(automata(max_states=2))
def test_table_rewrites_against_oracle(a):
    for name in ("run-meets-to-a", "complement-table", "inf-meets-to-L", "fin-subseteq-to-fin-eq",
                 "fin-meets-to-fin-eq", "add-sink", "complete-for-fin"):
        _check(name, a)


@given(automata(max_states=2))
def test_product_rewrites_against_oracle(a):
    # outputs can be large, so the oracle only ever sees the small input
    for name in ("a-to-run-meets", "aprime-to-run-subseteq", "run-subseteq-to-aprime",
                 "single-accepting-Lprime", "inf-meets-to-fin-eq"):
        _check(name, a)


@given(automata(max_states=2, deterministic=True, complete=True))
def test_cdfa_rewrites_against_oracle(a):
    _check("L-to-inf-meets", a)
    _check("dfa-fin-subseteq-decompose", a)
    out = lprime_to_inf_subseteq(single_accepting_Lprime(a))
    for w in enumerate_lassos(AB, 2, 2):
        assert accepts(out, INF_SUB, w) == oracle.accepts(a, Named.LPRIME, w), w
