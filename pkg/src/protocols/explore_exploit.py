"""
Explore-then-exploit and epsilon-greedy.

Both explore round-robin until every arm has been played N times. The first
then commits to the best empirical arm; the second keeps playing the current
best arm with probability 1 - epsilon and a uniformly random arm otherwise.
"""

import logging
from typing import Optional

import numpy as np

from ..common.constants import (
    DEFAULT_EPSILON,
    DEFAULT_EPSILON_EXPLORATION,
    DEFAULT_EXPLORATION,
)
from .agent import Agent, require
from .estimates import CountEstimates

logger = logging.getLogger(__name__)


class ExploreThenExploitAgent(Agent):
    """
    Plays each arm N times round-robin, then commits to the best empirical arm.

    Attributes:
        exploration (int): N, plays per arm before commitment.
        estimates (CountEstimates): The exploration counts.
    """

    name = "ete"

    def __init__(self, num_arms: int, exploration: int = DEFAULT_EXPLORATION) -> None:
        super().__init__(num_arms)
        require(exploration >= 1, f"Exploration N must be at least 1, got {exploration}.")
        self.exploration = int(exploration)
        self.estimates = CountEstimates(num_arms)
        self._committed: Optional[int] = None

    @property
    def exploration_steps(self) -> int:
        return self.num_arms * self.exploration

    @property
    def committed_arm(self) -> Optional[int]:
        return self._committed

    def exploit_choice(self) -> int:
        if self._committed is not None:
            return self._committed
        if self.steps == 0:
            return 1
        return self.estimates.best_empirical_arm()

    def action_probabilities(self) -> np.ndarray:
        probabilities = np.zeros(self.num_arms)
        probabilities[self._select(None) - 1] = 1.0
        return probabilities

    def _select(self, rng: Optional[np.random.Generator]) -> int:
        if self._committed is not None:
            return self._committed
        return self.steps % self.num_arms + 1

    def _update(self, arm: int, reward: int, rng: np.random.Generator) -> None:
        if self._committed is not None:
            return
        self.estimates.record(arm, reward)
        if self.steps >= self.exploration_steps:
            self._committed = self.estimates.best_empirical_arm()
            logger.debug(f"Committed to arm {self._committed} after {self.steps} steps")


class EpsilonGreedyAgent(Agent):
    """
    Round-robin exploration for K * N steps, then epsilon-greedy play.

    Attributes:
        exploration (int): N, plays per arm in the exploration phase.
        epsilon (float): Probability of playing a uniformly random arm.
        estimates (CountEstimates): Counts over all plays.
    """

    name = "egreedy"

    def __init__(
        self,
        num_arms: int,
        exploration: int = DEFAULT_EPSILON_EXPLORATION,
        epsilon: float = DEFAULT_EPSILON,
    ) -> None:
        super().__init__(num_arms)
        require(exploration >= 0, f"Exploration N must be nonnegative, got {exploration}.")
        require(0.0 <= epsilon <= 1.0, f"epsilon must lie in [0, 1], got {epsilon}.")
        self.exploration = int(exploration)
        self.epsilon = float(epsilon)
        self.estimates = CountEstimates(num_arms)

    @property
    def exploring(self) -> bool:
        return self.steps < self.num_arms * self.exploration

    def exploit_choice(self) -> int:
        return self.estimates.best_empirical_arm()

    def action_probabilities(self) -> np.ndarray:
        probabilities = np.zeros(self.num_arms)
        if self.exploring:
            probabilities[self.steps % self.num_arms] = 1.0
            return probabilities
        probabilities += self.epsilon / self.num_arms
        probabilities[self.exploit_choice() - 1] += 1.0 - self.epsilon
        return probabilities

    def _select(self, rng: np.random.Generator) -> int:
        if self.exploring:
            return self.steps % self.num_arms + 1
        if rng.random() < self.epsilon:
            return int(rng.integers(self.num_arms)) + 1
        return self.exploit_choice()

    def _update(self, arm: int, reward: int, rng: np.random.Generator) -> None:
        self.estimates.record(arm, reward)


def explore_then_exploit(
    num_arms: int, exploration: int = DEFAULT_EXPLORATION
) -> ExploreThenExploitAgent:
    return ExploreThenExploitAgent(num_arms, exploration)


def epsilon_greedy(
    num_arms: int,
    exploration: int = DEFAULT_EPSILON_EXPLORATION,
    epsilon: float = DEFAULT_EPSILON,
) -> EpsilonGreedyAgent:
    return EpsilonGreedyAgent(num_arms, exploration, epsilon)
