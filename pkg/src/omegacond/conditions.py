"""Acceptance conditions.

A condition is either a pair ``(stat, rel)`` read as "there is a table
member ``F`` with ``stat(p) rel F``", or one of the four named conditions
``A``, ``Aprime``, ``L`` and ``Lprime``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union


class Stat(str, Enum):
    RUN = "run"
    INF = "inf"
    FIN = "fin"
    NINF = "ninf"


class Rel(str, Enum):
    MEETS = "meets"
    SUBSETEQ = "subseteq"
    EQ = "eq"


@dataclass(frozen=True)
class Pair:
    stat: Stat
    rel: Rel

    def __str__(self):
        return f"{self.stat.value} {self.rel.value}"


class Named(str, Enum):
    A = "A"
    APRIME = "Aprime"
    L = "L"
    LPRIME = "Lprime"

    def __str__(self):
        return self.value


Condition = Union[Pair, Named]

PAIRS = tuple(Pair(s, r) for s in Stat for r in Rel)
NAMED = tuple(Named)
ALL_CONDITIONS: tuple = PAIRS + NAMED

BUCHI = Pair(Stat.INF, Rel.MEETS)
MULLER = Pair(Stat.INF, Rel.EQ)

_REL_ALIASES = {
    "meets": Rel.MEETS, "⊓": Rel.MEETS,
    "subseteq": Rel.SUBSETEQ, "⊆": Rel.SUBSETEQ,
    "eq": Rel.EQ, "=": Rel.EQ,
}


def parse_condition(text: str) -> Condition:
    """Parse ``"fin eq"``, ``"fin,eq"``, ``"fin-eq"`` or a named condition."""
    words = text.replace(",", " ").replace("-", " ").split()
    if len(words) == 1:
        try:
            return Named(words[0])
        except ValueError:
            pass
    elif len(words) == 2:
        try:
            return Pair(Stat(words[0]), _REL_ALIASES[words[1]])
        except (ValueError, KeyError):
            pass
    raise ValueError(f"unknown condition {text!r}")
