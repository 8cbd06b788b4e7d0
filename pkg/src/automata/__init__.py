"""
Automata module for the bandit automata.

This module provides probabilistic finite automata with output, their
stochastic execution against bandits, exact analysis and the document format.
"""

from .analysis import (
    exact_action_distribution,
    expected_regret_curve,
    reachable_state_count,
    reachable_states,
)
from .document import deserialize, from_document, serialize, to_document
from .engine import RunTrace, act, run, step
from .pfa import Observation, Pfa, RulePfa, TablePfa, materialize, observations

__all__ = [
    "Observation",
    "Pfa",
    "RulePfa",
    "RunTrace",
    "TablePfa",
    "act",
    "deserialize",
    "exact_action_distribution",
    "expected_regret_curve",
    "from_document",
    "materialize",
    "observations",
    "reachable_state_count",
    "reachable_states",
    "run",
    "serialize",
    "step",
    "to_document",
]
