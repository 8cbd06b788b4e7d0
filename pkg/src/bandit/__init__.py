"""
Bandit module for the bandit automata.

This module provides Bernoulli bandit environments, the random instance
generator, and the genericity and permutation predicates.
"""

from .bernoulli import (
    BernoulliBandit,
    best_mean,
    genericity_violation,
    is_generic,
    permute,
    sample_bandit,
)
from .permutation import Permutation, all_permutations, permutation_sample

__all__ = [
    "BernoulliBandit",
    "Permutation",
    "all_permutations",
    "best_mean",
    "genericity_violation",
    "is_generic",
    "permutation_sample",
    "permute",
    "sample_bandit",
]
