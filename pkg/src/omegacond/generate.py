"""Seeded random automata for property tests and corpus checks."""
from __future__ import annotations

import random

from .core import Automaton


def random_automaton(rng: random.Random, max_states: int = 4, alphabet=("a", "b"), max_table: int = 3,
                     deterministic: bool = False, complete: bool = False, density: float = 0.4) -> Automaton:
    """An automaton with 1..max_states states ``q0, q1, ...``.

    Deterministic automata draw one optional successor per (state, letter);
    otherwise each possible transition is present with probability
    ``density``.  ``complete`` guarantees at least one successor everywhere.
    The table has 0..max_table random member sets (possibly empty ones).
    """
    n = rng.randint(1, max_states)
    states = [f"q{i}" for i in range(n)]
    trans = set()
    for p in states:
        for x in alphabet:
            if deterministic:
                if complete or rng.random() < 0.85:
                    trans.add((p, x, rng.choice(states)))
                continue
            targets = [q for q in states if rng.random() < density]
            if complete and not targets:
                targets = [rng.choice(states)]
            trans.update((p, x, q) for q in targets)
    table = set()
    for _ in range(rng.randint(0, max_table)):
        table.add(frozenset(q for q in states if rng.random() < 0.4))
    return Automaton(alphabet, states, trans, "q0", table)


def corpus(seed: int, count: int, **kw) -> list:
    rng = random.Random(seed)
    return [random_automaton(rng, **kw) for _ in range(count)]
