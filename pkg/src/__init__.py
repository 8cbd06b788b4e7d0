"""
Main module for the bandit automata.

This module provides probabilistic finite automata that play multi-armed
bandits, the finite-state protocols compiled into them, the baselines they are
compared with, and the experiment harness.
"""

from .automata import Pfa, RulePfa, TablePfa, run
from .bandit import BernoulliBandit, Permutation, sample_bandit
from .protocols import Agent, compile_aspiration, compile_elimination, make_agent
from .version import __author__, __copyright__, __license__, __version__

__all__ = [
    "__version__",
    "__author__",
    "__license__",
    "__copyright__",
    "Agent",
    "BernoulliBandit",
    "Permutation",
    "Pfa",
    "RulePfa",
    "TablePfa",
    "compile_aspiration",
    "compile_elimination",
    "make_agent",
    "run",
    "sample_bandit",
]
