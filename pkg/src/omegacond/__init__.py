"""Finite automata on infinite words under (stat, rel) acceptance conditions.

A condition pairs a run statistic (run, inf, fin, ninf) with a relation
(meets, subseteq, eq) against the members of the acceptance table; four
named conditions (A, Aprime, L, Lprime) complete the set.  The package
decides membership of lasso words exactly, rewrites automata between
conditions, translates every condition to Büchi acceptance, and emits
MSO formulas.
"""
from .buchi import (Counterexample, EmptinessReport, Equal, as_buchi, bounded_equiv,
                    condition_to_muller, is_empty, muller_accepts, muller_to_buchi, to_buchi)
from .conditions import (ALL_CONDITIONS, BUCHI, MULLER, NAMED, PAIRS, Named, Pair, Rel, Stat,
                         parse_condition)
from .core import Automaton, is_complete, is_deterministic, reachable, trim_unreachable, validate
from .errors import (InvalidAutomaton, OmegaError, PreconditionError, SizeGuardError,
                     UnsupportedCondition)
from .mso import automaton_formula
from .oaut import Document, ParseError
from .semantics import RunSummary, accepts, run_summaries, witness_walk
from .transforms import TRANSFORMS, Intersection, Leaf, Union, expr_accepts
from .witnesses import FIGURES, figure_automaton, language_predicate, verify_figure
from .words import LassoWord, enumerate_lassos, normalize, parse_word, render_word

__version__ = "0.1.0"
