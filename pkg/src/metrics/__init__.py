"""
Metrics module for the bandit automata.

This module provides regret accounting, gap measurement and aggregation of
regret curves across replications.
"""

from .aggregate import AggregateCurve, aggregate, aggregate_samples, step_grid, tail_slope
from .regret import RegretTrace, final_gap, limiting_gap, policy_gap, pseudo_regret

__all__ = [
    "AggregateCurve",
    "RegretTrace",
    "aggregate",
    "aggregate_samples",
    "final_gap",
    "limiting_gap",
    "policy_gap",
    "pseudo_regret",
    "step_grid",
    "tail_slope",
]
