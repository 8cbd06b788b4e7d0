"""
Version information for the bandit automata.

This module provides version information for the bandit automata.
"""

__version__ = "0.1.0"
__author__ = "Bandit Automata Developers"
__license__ = "MIT"
__copyright__ = "Copyright 2024, Bandit Automata Developers"
