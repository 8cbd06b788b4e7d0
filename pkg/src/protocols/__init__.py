"""
Protocols module for the bandit automata.

This module provides the bandit-playing agents (aspiration-level search,
elimination tournament, explore-then-exploit, epsilon-greedy and Thompson
Sampling), their finite-state compilations and the protocol registry.
"""

from .agent import Agent
from .aspiration import (
    AspirationAgent,
    AspirationState,
    TwoPhaseAspirationAgent,
    aspiration_agent,
    aspiration_two_phase,
    virtual_probability,
)
from .compile import (
    aspiration_state_count,
    compile_aspiration,
    compile_elimination,
    compile_explore_then_exploit,
    compile_stay_on_success,
    compiled_protocol,
    constant_pfa,
    elimination_state_count,
    explore_then_exploit_state_count,
)
from .elimination import EliminationAgent, EliminationState, Turn, elimination_agent
from .estimates import CountEstimates
from .explore_exploit import (
    EpsilonGreedyAgent,
    ExploreThenExploitAgent,
    epsilon_greedy,
    explore_then_exploit,
)
from .registry import (
    PARAMETER_KEYS,
    PROTOCOLS,
    format_parameters,
    make_agent,
    protocol_info,
    resolve_parameters,
)
from .thompson import ThompsonAgent, thompson_agent

__all__ = [
    "Agent",
    "AspirationAgent",
    "AspirationState",
    "CountEstimates",
    "EliminationAgent",
    "EliminationState",
    "EpsilonGreedyAgent",
    "ExploreThenExploitAgent",
    "PARAMETER_KEYS",
    "PROTOCOLS",
    "ThompsonAgent",
    "Turn",
    "TwoPhaseAspirationAgent",
    "aspiration_agent",
    "aspiration_state_count",
    "aspiration_two_phase",
    "compile_aspiration",
    "compile_elimination",
    "compile_explore_then_exploit",
    "compile_stay_on_success",
    "compiled_protocol",
    "constant_pfa",
    "elimination_agent",
    "elimination_state_count",
    "epsilon_greedy",
    "explore_then_exploit",
    "explore_then_exploit_state_count",
    "format_parameters",
    "make_agent",
    "protocol_info",
    "resolve_parameters",
    "thompson_agent",
    "virtual_probability",
]
