"""
Constants for the bandit automata.

This module provides the default parameters shared by protocols and the harness.
"""

# Numerical constants
DISTRIBUTION_TOLERANCE = 1e-9

# Aspiration-level protocol
DEFAULT_RANKS = 100  # m
DEFAULT_ACCEPT_THRESHOLD = 20  # M1
DEFAULT_REJECT_THRESHOLD = 3  # M2, stored as a positive magnitude
DEFAULT_COARSE_ACCEPT_THRESHOLD = 5  # M1'
DEFAULT_COARSE_REJECT_THRESHOLD = 1  # M2'

# Elimination tournament
DEFAULT_COUNTER_THRESHOLD = 20  # M
DEFAULT_STOP_PARAMETER = 1000  # N, comparison stops with probability 1/N

# Baselines
DEFAULT_EPSILON = 0.1
DEFAULT_EPSILON_EXPLORATION = 100
DEFAULT_EXPLORATION = 10

# Experiments
DEFAULT_ARMS = 50
DEFAULT_HORIZON = 50_000
DEFAULT_REPLICATIONS = 100
DEFAULT_SEED = 0
DEFAULT_CURVE_ROWS = 500
QUICK_REPLICATIONS = 20
QUICK_HORIZON = 10_000
MAX_DEMO_PERMUTATIONS = 120
MAX_COMPILED_STATES = 2_000_000
DEFAULT_SETTLE_LIMIT = 1_000_000  # steps an uncommitted agent may play past the horizon

# Reproducibility identifiers written next to every result
RNG_ALGORITHM = "numpy.random.PCG64"
BETA_SAMPLER = "numpy.random.Generator.beta"
