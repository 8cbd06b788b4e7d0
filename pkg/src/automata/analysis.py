"""
Exact analysis of PFAs: reachability and outcome enumeration.
"""

import logging
from collections import defaultdict, deque
from typing import Dict, Tuple

import numpy as np

from ..bandit.bernoulli import BernoulliBandit
from .pfa import Observation, Pfa

logger = logging.getLogger(__name__)


def reachable_states(pfa: Pfa) -> np.ndarray:
    """
    Mark the states reachable from the start through positive-probability
    transitions under some observation sequence.

    Args:
        pfa (Pfa): The automaton.

    Returns:
        np.ndarray: A boolean mask over state ids.
    """
    seen = np.zeros(pfa.num_states, dtype=bool)
    seen[pfa.start] = True
    queue = deque([pfa.start])
    while queue:
        state = queue.popleft()
        for obs in pfa.defined_inputs(state):
            for successor, p in pfa.transition_distribution(state, obs):
                if p > 0.0 and not seen[successor]:
                    seen[successor] = True
                    queue.append(successor)
    return seen


def reachable_state_count(pfa: Pfa) -> int:
    """
    Count the states reachable from the start state.

    Args:
        pfa (Pfa): The automaton.

    Returns:
        int: The number of reachable states, at most ``pfa.num_states``.
    """
    count = int(reachable_states(pfa).sum())
    logger.info(f"{count} of {pfa.num_states} states reachable")
    return count


def _reward_outcomes(bandit: BernoulliBandit, arm: int):
    mu = bandit.mean(arm)
    for reward, p in ((0, 1.0 - mu), (1, mu)):
        if p > 0.0:
            yield reward, p


def exact_action_distribution(
    pfa: Pfa, bandit: BernoulliBandit, horizon: int
) -> Dict[Tuple[int, ...], float]:
    """
    Enumerate every coin and reward outcome to get the exact law of the
    first ``horizon`` actions.

    Exponential in ``horizon``; meant for tiny automata.

    Args:
        pfa (Pfa): The automaton.
        bandit (BernoulliBandit): The environment.
        horizon (int): The number of steps.

    Returns:
        Dict[Tuple[int, ...], float]: Probability of each action sequence.
    """
    frontier: Dict[Tuple[int, Tuple[int, ...]], float] = {(pfa.start, ()): 1.0}
    for _ in range(horizon):
        advanced: Dict[Tuple[int, Tuple[int, ...]], float] = defaultdict(float)
        for (state, played), p_path in frontier.items():
            for arm, p_arm in pfa.action_distribution(state):
                for reward, p_reward in _reward_outcomes(bandit, arm):
                    obs = Observation(arm, reward)
                    for successor, p_next in pfa.transition_distribution(state, obs):
                        advanced[(successor, played + (arm,))] += (
                            p_path * p_arm * p_reward * p_next
                        )
        frontier = advanced

    law: Dict[Tuple[int, ...], float] = defaultdict(float)
    for (_, played), p in frontier.items():
        law[played] += p
    return dict(law)


def expected_regret_curve(
    pfa: Pfa, bandit: BernoulliBandit, horizon: int
) -> np.ndarray:
    """
    Compute Reg(P, B, t) for t = 1..horizon exactly by propagating the state
    distribution.

    Args:
        pfa (Pfa): The automaton.
        bandit (BernoulliBandit): The environment.
        horizon (int): The number of steps.

    Returns:
        np.ndarray: Expected cumulative pseudo-regret after each step.
    """
    gaps = bandit.gaps()
    occupancy = {pfa.start: 1.0}
    increments = np.zeros(horizon)
    for t in range(horizon):
        advanced: Dict[int, float] = defaultdict(float)
        for state, p_state in occupancy.items():
            for arm, p_arm in pfa.action_distribution(state):
                increments[t] += p_state * p_arm * gaps[arm - 1]
                for reward, p_reward in _reward_outcomes(bandit, arm):
                    obs = Observation(arm, reward)
                    for successor, p_next in pfa.transition_distribution(state, obs):
                        advanced[successor] += p_state * p_arm * p_reward * p_next
        occupancy = advanced
    return np.cumsum(increments)
