"""
Stochastic execution of a PFA against a Bernoulli bandit.

Each execution owns its random stream and cursor; the automaton itself is
never mutated, so executions of one PFA can run concurrently.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..bandit.bernoulli import BernoulliBandit
from ..common.exceptions import StructureError
from .distribution import sample
from .pfa import Observation, Pfa

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunTrace:
    """
    The record of one execution.

    Attributes:
        actions (np.ndarray): The arm played at each step.
        rewards (np.ndarray): The reward received at each step, 0 or 1.
        final_state (int): The state after the last transition.
    """

    actions: np.ndarray
    rewards: np.ndarray
    final_state: int

    @property
    def horizon(self) -> int:
        return int(self.actions.size)


def act(pfa: Pfa, state: int, rng: np.random.Generator) -> int:
    """
    Sample the arm played in ``state`` from gamma(state).

    Args:
        pfa (Pfa): The automaton.
        state (int): The current state id.
        rng (np.random.Generator): The execution's random stream.

    Returns:
        int: The arm to play.

    Raises:
        StructureError: If ``state`` is unknown.
    """
    return sample(pfa.action_distribution(state), rng)


def step(pfa: Pfa, state: int, obs: Observation, rng: np.random.Generator) -> int:
    """
    Sample the successor of ``state`` after observing ``obs`` from delta(state, obs).

    Args:
        pfa (Pfa): The automaton.
        state (int): The current state id.
        obs (Observation): What the last pull produced.
        rng (np.random.Generator): The execution's random stream.

    Returns:
        int: The successor state id.

    Raises:
        StructureError: If the transition is undefined.
    """
    return sample(pfa.transition_distribution(state, obs), rng)


def run(
    pfa: Pfa, bandit: BernoulliBandit, horizon: int, rng: np.random.Generator
) -> RunTrace:
    """
    Play ``horizon`` steps of act / pull / step.

    Once the execution enters an absorbing state the remaining pulls are drawn
    in one vectorized block.

    Args:
        pfa (Pfa): The automaton; its outputs must be exactly the arms 1..K.
        bandit (BernoulliBandit): The environment.
        horizon (int): The number of steps, at least 0.
        rng (np.random.Generator): The execution's random stream.

    Returns:
        RunTrace: The actions, rewards and final state.

    Raises:
        StructureError: If the alphabets do not match the bandit or the
            horizon is negative.
    """
    if pfa.outputs != tuple(range(1, bandit.num_arms + 1)):
        logger.error(
            f"PFA outputs {pfa.outputs} do not match the {bandit.num_arms} arms."
        )
        raise StructureError("PFA output alphabet must be the bandit's arms 1..K.")
    if horizon < 0:
        raise StructureError(f"Horizon must be nonnegative, got {horizon}.")

    by_outcome = {(obs.arm, obs.reward): obs for obs in pfa.inputs}
    actions = np.zeros(horizon, dtype=np.int64)
    rewards = np.zeros(horizon, dtype=np.int8)
    state = pfa.start
    t = 0
    while t < horizon:
        if pfa.is_absorbing(state):
            arm = pfa.action_distribution(state)[0][0]
            actions[t:] = arm
            rewards[t:] = bandit.pull_many(arm, horizon - t, rng)
            logger.debug(f"Absorbed in {pfa.label(state)!r} at step {t + 1}")
            break
        arm = act(pfa, state, rng)
        reward = bandit.pull(arm, rng)
        obs = by_outcome.get((arm, reward))
        if obs is None:
            raise StructureError(f"Observation {arm}:{reward} is not an input symbol.")
        state = step(pfa, state, obs, rng)
        actions[t] = arm
        rewards[t] = reward
        t += 1
    return RunTrace(actions=actions, rewards=rewards, final_state=state)
