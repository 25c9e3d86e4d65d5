"""Command-line interface: ``omegacond COMMAND ...``.

Exit codes: 0 for success or a true answer, 1 for a false answer or a
counterexample, 2 for any error (one line on stderr).
"""
from __future__ import annotations

import argparse
import sys

from . import mso, oaut
from .buchi import as_buchi, bounded_equiv, is_empty, to_buchi
from .conditions import BUCHI, parse_condition
from .core import is_complete, is_deterministic
from .errors import OmegaError
from .transforms import TRANSFORMS
from .witnesses import FIGURES, figure_automaton, verify_figure
from .words import parse_word, render_word


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(path, cond_words=None) -> oaut.Document:
    doc = oaut.load(path)
    if cond_words:
        doc = oaut.Document(doc.automaton, parse_condition(" ".join(cond_words)))
    return doc


def _write(text: str, out, stdout) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _report(result, stdout) -> int:
    if result:
        stdout.write(f"equal-bounded {result.stem_max} {result.cycle_max}\n")
        return 0
    w = render_word(result.word)
    stdout.write(f"counterexample {w} in1={str(result.in1).lower()} in2={str(result.in2).lower()}\n")
    return 1


def cmd_info(args, stdout):
    doc = _load(args.file, args.cond)
    a = doc.automaton
    table = " ".join(oaut._set_text(a, f) for f in oaut.sorted_table(a)) or "-"
    stdout.write(f"states {len(a.states)}\n"
                 f"transitions {len(a.transitions)}\n"
                 f"deterministic {str(is_deterministic(a)).lower()}\n"
                 f"complete {str(is_complete(a)).lower()}\n"
                 f"table {len(a.table)} {table}\n"
                 f"cond {doc.condition}\n")
    return 0


def cmd_accepts(args, stdout):
    doc = _load(args.file, args.cond)
    from .semantics import accepts

    w = parse_word(args.word, doc.automaton.alphabet)
    ok = accepts(doc.automaton, doc.condition, w)
    stdout.write("true\n" if ok else "false\n")
    return 0 if ok else 1


def cmd_transform(args, stdout):
    if args.name not in TRANSFORMS:
        raise UsageError(f"unknown transform {args.name!r}; known: {', '.join(TRANSFORMS)}")
    doc = _load(args.file, args.cond)
    out, target = TRANSFORMS[args.name].apply(doc.automaton, doc.condition)
    if target is None:
        _write(oaut.serialize_expr(out), args.output, stdout)
    else:
        _write(oaut.serialize(oaut.Document(out, target)), args.output, stdout)
    return 0


def cmd_to_buchi(args, stdout):
    doc = _load(args.file, args.cond)
    b = to_buchi(doc.automaton, doc.condition)
    _write(oaut.serialize(oaut.Document(b, BUCHI)), args.output, stdout)
    return 0


def cmd_empty(args, stdout):
    doc = _load(args.file, args.cond)
    rep = is_empty(as_buchi(doc.automaton, doc.condition))
    if rep.empty:
        stdout.write("empty\n")
        return 0
    stdout.write(f"witness {render_word(rep.witness)}\n")
    return 1


def cmd_equiv(args, stdout):
    d1, d2 = _load(args.file1), _load(args.file2)
    r = bounded_equiv(d1.automaton, d1.condition, d2.automaton, d2.condition, args.stem_max, args.cycle_max)
    return _report(r, stdout)


def cmd_emit_mso(args, stdout):
    doc = _load(args.file, args.cond)
    stdout.write(mso.render(mso.automaton_formula(doc.automaton, doc.condition)) + "\n")
    return 0


def cmd_witness(args, stdout):
    if args.figure not in FIGURES:
        raise UsageError(f"unknown figure {args.figure!r}; known: {', '.join(FIGURES)}")
    if args.check:
        return _report(verify_figure(args.figure, args.stem_max, args.cycle_max), stdout)
    a, cond = figure_automaton(args.figure)
    _write(oaut.serialize(oaut.Document(a, cond)), args.output, stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="omegacond", description="Automata on infinite words under (stat, rel) acceptance.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, func, help_, cond=True):
        s = sub.add_parser(name, help=help_)
        s.set_defaults(func=func)
        if cond:
            s.add_argument("--cond", nargs="+", metavar="WORD", help="override the file's condition, e.g. --cond fin eq")
        return s

    s = cmd("info", cmd_info, "summarize an automaton file")
    s.add_argument("file")
    s = cmd("accepts", cmd_accepts, "test a lasso word STEM:CYCLE")
    s.add_argument("file")
    s.add_argument("--word", required=True)
    s = cmd("transform", cmd_transform, "apply a named rewrite")
    s.add_argument("name")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s = cmd("to-buchi", cmd_to_buchi, "translate to Büchi acceptance")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s = cmd("empty", cmd_empty, "decide emptiness, printing a witness word if nonempty")
    s.add_argument("file")
    s = cmd("equiv", cmd_equiv, "bounded lasso equivalence of two files", cond=False)
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--stem-max", type=int, default=3)
    s.add_argument("--cycle-max", type=int, default=3)
    s = cmd("emit-mso", cmd_emit_mso, "print the MSO formula of the language")
    s.add_argument("file")
    s = cmd("witness", cmd_witness, "print or check a figure automaton", cond=False)
    s.add_argument("figure")
    s.add_argument("--check", action="store_true")
    s.add_argument("--stem-max", type=int, default=4)
    s.add_argument("--cycle-max", type=int, default=4)
    s.add_argument("-o", "--output")
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, stdout)
    except (UsageError, OmegaError, ValueError, OSError, RecursionError) as e:
        msg = " ".join(str(e).split()) or type(e).__name__
        stderr.write(f"omegacond: error: {msg}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
