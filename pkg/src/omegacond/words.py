"""Ultimately periodic words ``stem . cycle^omega``."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True)
class LassoWord:
    stem: tuple
    cycle: tuple

    def __post_init__(self):
        object.__setattr__(self, "stem", tuple(self.stem))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise ValueError("cycle must be nonempty")

    def __len__(self):
        # number of distinct positions in the lasso
        return len(self.stem) + len(self.cycle)

    @property
    def is_canonical(self) -> bool:
        return primitive_root(self.cycle) == self.cycle and (
            not self.stem or self.stem[-1] != self.cycle[-1])

    def symbols(self) -> set:
        return set(self.stem) | set(self.cycle)

    def prefix(self, n: int) -> tuple:
        return tuple(letter_at(self, i) for i in range(n))

    def __str__(self):
        return render_word(self)


def primitive_root(cycle: tuple) -> tuple:
    n = len(cycle)
    for d in range(1, n + 1):
        if n % d == 0 and cycle[:d] * (n // d) == cycle:
            return cycle[:d]
    return cycle


def normalize(stem, cycle=None) -> LassoWord:
    """Canonical form of ``stem . cycle^omega``.

    Accepts either a LassoWord or a ``(stem, cycle)`` pair.
    """
    if cycle is None:
        stem, cycle = stem.stem, stem.cycle
    stem, cycle = list(stem), tuple(cycle)
    if not cycle:
        raise ValueError("cycle must be nonempty")
    cycle = primitive_root(cycle)
    while stem and stem[-1] == cycle[-1]:
        stem.pop()
        cycle = cycle[-1:] + cycle[:-1]
    return LassoWord(tuple(stem), cycle)


def letter_at(w: LassoWord, i: int):
    if i < len(w.stem):
        return w.stem[i]
    return w.cycle[(i - len(w.stem)) % len(w.cycle)]


def word_eq(w1: LassoWord, w2: LassoWord) -> bool:
    """Equality as infinite words (structural on canonical forms)."""
    return normalize(w1) == normalize(w2)


def enumerate_lassos(alphabet, stem_max: int, cycle_max: int):
    """Every canonical lasso with ``|stem| <= stem_max`` and
    ``1 <= |cycle| <= cycle_max``, ordered by total length, then stem
    length, then stem and cycle lexicographically in alphabet order."""
    alphabet = tuple(alphabet)
    for total in range(1, stem_max + cycle_max + 1):
        for ls in range(0, min(stem_max, total - 1) + 1):
            lc = total - ls
            if lc > cycle_max:
                continue
            for stem in product(alphabet, repeat=ls):
                for cycle in product(alphabet, repeat=lc):
                    w = LassoWord(stem, cycle)
                    if w.is_canonical:
                        yield w


# -- text syntax "STEM:CYCLE" -------------------------------------------------

def render_word(w: LassoWord) -> str:
    syms = w.symbols()
    sep = "" if all(len(s) == 1 for s in syms) else ","
    return sep.join(w.stem) + ":" + sep.join(w.cycle)


def parse_word(text: str, alphabet=None) -> LassoWord:
    """Parse ``"ab:ba"``; symbols are single characters unless the text
    contains commas, in which case they are comma separated."""
    if text.count(":") != 1:
        raise ValueError(f"word must look like STEM:CYCLE, got {text!r}")
    stem_t, cycle_t = text.split(":")

    def split(part):
        if not part:
            return ()
        if "," in text:
            return tuple(s for s in part.split(",") if s)
        return tuple(part)

    stem, cycle = split(stem_t), split(cycle_t)
    if not cycle:
        raise ValueError("cycle must be nonempty")
    if alphabet is not None:
        bad = (set(stem) | set(cycle)) - set(alphabet)
        if bad:
            raise ValueError(f"symbols not in alphabet: {sorted(bad)}")
    return LassoWord(stem, cycle)
