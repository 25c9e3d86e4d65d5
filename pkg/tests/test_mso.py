import pytest
from hypothesis import given

from omegacond.conditions import ALL_CONDITIONS, Named, Pair, Rel, Stat
from omegacond.errors import UnsupportedCondition
from omegacond.mso import (And, ExistsFO, ExistsSO, FOEq, ForallFO, ForallSO, Implies, Letter, Lt, Not, Or,
                           SetMem, Succ, automaton_formula, c_formula, cond_formula, count_so_quantifiers,
                           free_vars, parse, render)
from omegacond.witnesses import FIGURES

from strategies import automata

NINF_MEETS = Pair(Stat.NINF, Rel.MEETS)


def test_free_vars_examples():
    assert free_vars(SetMem("X", "x")) == {"X", "x"}
    assert free_vars(ExistsFO("x", FOEq("x", "x"))) == set()
    assert free_vars(And([Letter("a", "x"), SetMem("X", "y")])) == {"x", "X", "y"}
    assert free_vars(ForallSO("X", Implies(SetMem("X", "x"), Succ("x", "y")))) == {"x", "y"}


def test_c_formula_examples():
    inf = ForallFO("x", ExistsFO("y", And([Lt("x", "y"), SetMem("X", "y")])))
    assert c_formula(Stat.INF, "X") == inf
    assert c_formula(Stat.NINF, "X") == Not(inf)
    assert free_vars(c_formula(Stat.FIN, "X")) == {"X"}
    assert free_vars(c_formula(Stat.RUN, "X")) == {"X"}


def test_cond_formula_examples():
    xs = {"q": "X0"}
    assert cond_formula(Stat.INF, Rel.MEETS, [], xs) == Or([])
    assert cond_formula(Stat.INF, Rel.MEETS, [{"q"}], xs) == c_formula(Stat.INF, "X0")
    assert cond_formula(Stat.INF, Rel.EQ, [set()], xs) == Not(c_formula(Stat.INF, "X0"))


def test_render_examples():
    assert render(FOEq("x", "y")) == "(= x y)"
    assert render(c_formula(Stat.INF, "X")) == "(forall1 x (exists1 y (and (< x y) (in X y))))"
    assert render(Or([])) == "(or)" and render(And([])) == "(and)"


def test_figure2_golden(data_dir):
    a = FIGURES["fig2"][0]
    text = render(automaton_formula(a, NINF_MEETS))
    assert text + "\n" == (data_dir / "fig2_ninf_meets.mso").read_text(encoding="utf-8")
    assert render(automaton_formula(a, NINF_MEETS)) == text


def test_named_conditions_refused():
    with pytest.raises(UnsupportedCondition):
        automaton_formula(FIGURES["fig2"][0], Named.LPRIME)


def test_parse_errors():
    for bad in ["", "(= x)", "(bogus x)", "(= x y) extra", "(not (= x y)"]:
        with pytest.raises(ValueError):
            parse(bad)


@given(automata(max_states=3))
def test_formula_is_closed_with_one_set_per_state(a):
    for c in ALL_CONDITIONS:
        if isinstance(c, Named):
            continue
        f = automaton_formula(a, c)
        assert free_vars(f) == set()
        assert count_so_quantifiers(f) == len(a.states)
        assert parse(render(f)) == f
