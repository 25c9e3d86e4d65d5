import io
import subprocess
import sys

import pytest

from omegacond import oaut
from omegacond.cli import main
from omegacond.conditions import BUCHI
from omegacond.core import is_complete
from omegacond.witnesses import FIGURES


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def figs(tmp_path):
    paths = {}
    for name, (a, c) in FIGURES.items():
        p = tmp_path / f"{name}.oaut"
        oaut.dump(oaut.Document(a, c), p)
        paths[name] = p
    return paths


def test_accepts_examples(figs):
    assert run("accepts", figs["fig2"], "--word", ":a") == (0, "true\n", "")
    assert run("accepts", figs["fig5"], "--word", ":b") == (1, "false\n", "")


def test_accepts_cond_override(figs):
    # under L, {q1} ⊆ inf fails for a^ω
    assert run("accepts", figs["fig2"], "--word", ":a", "--cond", "L")[0] == 1
    assert run("accepts", figs["fig2"], "--word", ":a", "--cond", "ninf", "meets")[0] == 0


def test_usage_errors_are_one_line(figs):
    for argv in [("transform", "no-such-name", figs["fig2"]), ("accepts", figs["fig2"]), (),
                 ("accepts", figs["fig2"], "--word", ":c"), ("info", "/nonexistent.oaut"),
                 ("emit-mso", figs["fig2"]), ("witness", "fig9"),
                 ("transform", "run-meets-to-a", figs["fig2"])]:
        code, out, err = run(*argv)
        assert code == 2 and out == "", argv
        assert err.count("\n") == 1 and err.startswith("omegacond: error:"), argv


def test_parse_error_reports_position(tmp_path):
    p = tmp_path / "bad.oaut"
    p.write_text("alphabet a\nstate q0 init\ntrans q0 c q0\ntable -\ncond L\n")
    code, _, err = run("info", p)
    assert code == 2 and "line 3, col 10" in err


def test_info(figs):
    code, out, _ = run("info", figs["fig5"])
    assert code == 0
    assert out.splitlines() == ["states 6", "transitions 12", "deterministic true", "complete true",
                                "table 3 {} {q2} {q3 q4}", "cond fin eq"]


def test_transform_writes_canonical_file(figs, tmp_path):
    out = tmp_path / "o.oaut"
    assert run("transform", "complete-for-fin", figs["fig3"], "--cond", "fin", "subseteq", "-o", out)[0] == 0
    doc = oaut.load(out)
    assert is_complete(doc.automaton) and str(doc.condition) == "fin subseteq"
    assert oaut.serialize(doc) == out.read_text()


def test_transform_expression_output(figs):
    code, out, _ = run("transform", "dfa-fin-subseteq-decompose", figs["fig2"], "--cond", "fin", "subseteq")
    assert code == 0 and out.startswith("union ")
    oaut.parse_expr(out)


def test_to_buchi_empty_equiv(figs, tmp_path):
    b = tmp_path / "b.oaut"
    assert run("to-buchi", figs["fig3"], "-o", b)[0] == 0
    assert oaut.load(b).condition == BUCHI
    assert run("equiv", figs["fig3"], b, "--stem-max", 2, "--cycle-max", 2) == (0, "equal-bounded 2 2\n", "")
    code, out, _ = run("empty", b)
    assert code == 1 and out.startswith("witness ")
    assert run("accepts", figs["fig3"], "--word", out.split()[1]) == (0, "true\n", "")
    assert run("empty", figs["fig2"], "--cond", "inf", "eq")[0] == 1


def test_empty_on_empty_language(tmp_path):
    p = tmp_path / "e.oaut"
    p.write_text("alphabet a b\nstate q0 init\ntrans q0 a q0\ntable {}\ncond inf eq\n")
    assert run("empty", p) == (0, "empty\n", "")  # inf is never empty


def test_equiv_counterexample(figs):
    code, out, _ = run("equiv", figs["fig2"], figs["fig4"])
    assert code == 1 and out == "counterexample :a in1=true in2=false\n"


def test_emit_mso_golden(figs, data_dir):
    code, out, _ = run("emit-mso", figs["fig2"], "--cond", "ninf", "meets")
    assert code == 0 and out == (data_dir / "fig2_ninf_meets.mso").read_text()


def test_witness(figs):
    assert run("witness", "fig5", "--check") == (0, "equal-bounded 4 4\n", "")
    code, out, _ = run("witness", "fig5")
    assert code == 0 and out == figs["fig5"].read_text()


def test_deterministic_output(figs):
    a = run("to-buchi", figs["fig5"])
    b = run("to-buchi", figs["fig5"])
    assert a == b and a[0] == 0


def test_console_script_and_module(figs):
    for cmd in (["omegacond"], [sys.executable, "-m", "omegacond"]):
        p = subprocess.run(cmd + ["accepts", str(figs["fig2"]), "--word", ":a"], capture_output=True, text=True)
        assert (p.returncode, p.stdout) == (0, "true\n")
