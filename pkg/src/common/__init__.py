"""
Common module for the bandit automata.

This module provides constants, exceptions, the random stream contract and timing
helpers used across the package.
"""

from .constants import DISTRIBUTION_TOLERANCE, RNG_ALGORITHM
from .exceptions import (
    BanditAutomataError,
    CallOrderError,
    ConfigError,
    GenericityError,
    ParameterError,
    PfaFormatError,
    StructureError,
)
from .rng import make_rng, replication_rng, replication_seed, settlement_rng
from .timer import Timer

__all__ = [
    "DISTRIBUTION_TOLERANCE",
    "RNG_ALGORITHM",
    "BanditAutomataError",
    "CallOrderError",
    "ConfigError",
    "GenericityError",
    "ParameterError",
    "PfaFormatError",
    "StructureError",
    "make_rng",
    "replication_rng",
    "replication_seed",
    "settlement_rng",
    "Timer",
]
