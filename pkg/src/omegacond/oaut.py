"""The ``.oaut`` text format.

One directive per line, ``#`` starts a comment::

    alphabet a b
    state q0 init
    state q1
    trans q0 a q0
    trans q0 b q1
    table {q1} {}
    cond Lprime

``table -`` is the empty table; ``table {}`` is the table holding the empty
set.  Conditions are written ``cond fin eq`` or ``cond A`` / ``Aprime`` /
``L`` / ``Lprime``.  :func:`serialize` is canonical, so a document always
serializes to the same bytes.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .conditions import Condition, parse_condition
from .core import Automaton, is_token
from .errors import OmegaError
from .transforms import Intersection, Leaf, Union


class ParseError(OmegaError, ValueError):
    def __init__(self, line: int, col: int, msg: str):
        self.line, self.col, self.msg = line, col, msg
        super().__init__(f"line {line}, col {col}: {msg}")


@dataclass(frozen=True)
class Document:
    automaton: Automaton
    condition: Condition


_WORD = re.compile(r"\{|\}|[^\s{}]+")


def _tokens(line: str):
    """(text, column) pairs; columns are 1-based."""
    return [(m.group(), m.start() + 1) for m in _WORD.finditer(line)]


def parse(text: str) -> Document:
    alphabet = None
    states, initial = [], None
    trans, table, cond = [], None, None
    seen_table = seen_cond = False
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        (head, hcol), args = toks[0], toks[1:]

        def err(msg, col=hcol):
            raise ParseError(ln, col, msg)

        if alphabet is None and head != "alphabet":
            err("the first directive must be 'alphabet'")
        if head == "alphabet":
            if alphabet is not None:
                err("'alphabet' given twice")
            if not args:
                err("'alphabet' needs at least one symbol")
            for t, c in args:
                if not is_token(t):
                    err(f"bad symbol {t!r}", c)
            alphabet = [t for t, _ in args]
            if len(set(alphabet)) != len(alphabet):
                err("duplicate symbol in alphabet")
        elif head == "state":
            if len(args) not in (1, 2) or (len(args) == 2 and args[1][0] != "init"):
                err("expected 'state ID [init]'")
            name, c = args[0]
            if not is_token(name):
                err(f"bad state name {name!r}", c)
            if name in states:
                err(f"state {name!r} declared twice", c)
            states.append(name)
            if len(args) == 2:
                if initial is not None:
                    err("more than one initial state", args[1][1])
                initial = name
        elif head == "trans":
            if len(args) != 3:
                err("expected 'trans SRC SYM DST'")
            (p, pc), (x, xc), (q, qc) = args
            if p not in states:
                err(f"unknown state {p!r}", pc)
            if x not in alphabet:
                err(f"symbol {x!r} not in alphabet", xc)
            if q not in states:
                err(f"unknown state {q!r}", qc)
            trans.append((p, x, q))
        elif head == "table":
            if seen_table:
                err("'table' given twice")
            seen_table = True
            table = []
            if len(args) == 1 and args[0][0] == "-":
                continue
            if not args:
                err("'table' needs at least one set, or '-' for the empty table")
            cur = None
            for t, c in args:
                if t == "{":
                    if cur is not None:
                        err("nested '{'", c)
                    cur = []
                elif t == "}":
                    if cur is None:
                        err("unmatched '}'", c)
                    table.append(frozenset(cur))
                    cur = None
                else:
                    if cur is None:
                        err(f"expected '{{' before {t!r}", c)
                    if t not in states:
                        err(f"unknown state {t!r} in table", c)
                    cur.append(t)
            if cur is not None:
                err("unclosed '{'", len(line.rstrip()) + 1)
            if len(set(table)) != len(table):
                err("duplicate set in table")
        elif head == "cond":
            if seen_cond:
                err("'cond' given twice")
            seen_cond = True
            try:
                cond = parse_condition(" ".join(t for t, _ in args))
            except ValueError as e:
                err(str(e), args[0][1] if args else hcol)
        else:
            err(f"unknown directive {head!r}")
    last = len(text.splitlines()) + 1
    if alphabet is None:
        raise ParseError(last, 1, "missing 'alphabet'")
    if not states:
        raise ParseError(last, 1, "no states declared")
    if initial is None:
        raise ParseError(last, 1, "no state marked init")
    if not seen_table:
        raise ParseError(last, 1, "missing 'table'")
    if not seen_cond:
        raise ParseError(last, 1, "missing 'cond'")
    return Document(Automaton(alphabet, states, trans, initial, table), cond)


def _set_text(a: Automaton, f) -> str:
    return "{" + " ".join(a.sorted_set(f)) + "}"


def sorted_table(a: Automaton) -> list:
    return sorted(a.table, key=lambda f: sorted(a.index[q] for q in f))


def serialize(doc: Document) -> str:
    a = doc.automaton
    idx, sym = a.index, {x: i for i, x in enumerate(a.alphabet)}
    lines = ["alphabet " + " ".join(a.alphabet)]
    lines += [f"state {q} init" if q == a.initial else f"state {q}" for q in a.states]
    for p, x, q in sorted(a.transitions, key=lambda t: (idx[t[0]], sym[t[1]], idx[t[2]])):
        lines.append(f"trans {p} {x} {q}")
    if a.table:
        lines.append("table " + " ".join(_set_text(a, f) for f in sorted_table(a)))
    else:
        lines.append("table -")
    lines.append(f"cond {doc.condition}")
    return "\n".join(lines) + "\n"


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(doc: Document, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(doc))


# -- language expressions --------------------------------------------------------
#
#   union 2
#     intersection 1
#       leaf
#         alphabet a
#         ...
#
# Every node line states its child count; a leaf's document follows,
# indented one level deeper.

def serialize_expr(e) -> str:
    out = []

    def go(e, depth):
        pad = "  " * depth
        if isinstance(e, Leaf):
            out.append(pad + "leaf")
            body = serialize(Document(e.automaton, e.cond))
            out.extend(pad + "  " + ln for ln in body.splitlines())
        else:
            kind = "union" if isinstance(e, Union) else "intersection"
            out.append(f"{pad}{kind} {len(e.children)}")
            for c in e.children:
                go(c, depth + 1)

    go(e, 0)
    return "\n".join(out) + "\n"


def parse_expr(text: str):
    lines = text.splitlines()
    pos = 0

    def go():
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(pos + 1, 1, "unexpected end of expression")
        line = lines[pos]
        depth = len(line) - len(line.lstrip(" "))
        words = line.split()
        pos += 1
        if words == ["leaf"]:
            body = []
            while pos < len(lines) and len(lines[pos]) - len(lines[pos].lstrip(" ")) > depth:
                body.append(lines[pos].strip())
                pos += 1
            doc = parse("\n".join(body))
            return Leaf(doc.automaton, doc.condition)
        if len(words) == 2 and words[0] in ("union", "intersection") and words[1].isdigit():
            kids = tuple(go() for _ in range(int(words[1])))
            return Union(kids) if words[0] == "union" else Intersection(kids)
        raise ParseError(pos, depth + 1, f"expected 'leaf', 'union N' or 'intersection N', got {line.strip()!r}")

    e = go()
    if any(ln.strip() for ln in lines[pos:]):
        raise ParseError(pos + 1, 1, "trailing text after expression")
    return e
