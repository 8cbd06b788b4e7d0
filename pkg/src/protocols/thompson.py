"""
Thompson Sampling with a uniform Beta(1, 1) prior on every arm.
"""

import numpy as np

from .agent import Agent
from .estimates import CountEstimates


class ThompsonAgent(Agent):
    """
    Samples one value from each arm's Beta(s + 1, f + 1) posterior and plays the argmax.

    Attributes:
        estimates (CountEstimates): The posterior counts.
    """

    name = "thompson"

    def __init__(self, num_arms: int) -> None:
        super().__init__(num_arms)
        self.estimates = CountEstimates(num_arms)

    def posterior(self, arm: int):
        """
        Get the Beta parameters of ``arm``.

        Returns:
            Tuple[int, int]: (s_k + 1, f_k + 1).
        """
        return (
            int(self.estimates.successes[arm - 1]) + 1,
            int(self.estimates.failures[arm - 1]) + 1,
        )

    def exploit_choice(self) -> int:
        return int(np.argmax(self.estimates.posterior_means())) + 1

    def _select(self, rng: np.random.Generator) -> int:
        draws = rng.beta(self.estimates.successes + 1, self.estimates.failures + 1)
        return int(np.argmax(draws)) + 1

    def _update(self, arm: int, reward: int, rng: np.random.Generator) -> None:
        self.estimates.record(arm, reward)


def thompson_agent(num_arms: int) -> ThompsonAgent:
    return ThompsonAgent(num_arms)
