"""
Per-arm success and failure counts kept by the infinite-state baselines.
"""

import numpy as np


class CountEstimates:
    """
    Success count s_k and failure count f_k of every arm.

    Attributes:
        successes (np.ndarray): s_k, indexed from 0.
        failures (np.ndarray): f_k, indexed from 0.
    """

    def __init__(self, num_arms: int) -> None:
        self.successes = np.zeros(num_arms, dtype=np.int64)
        self.failures = np.zeros(num_arms, dtype=np.int64)

    def record(self, arm: int, reward: int) -> None:
        """
        Count one pull of ``arm``.

        Args:
            arm (int): The arm, 1..K.
            reward (int): 0 or 1.
        """
        if reward:
            self.successes[arm - 1] += 1
        else:
            self.failures[arm - 1] += 1

    @property
    def plays(self) -> np.ndarray:
        return self.successes + self.failures

    def empirical_means(self) -> np.ndarray:
        """Get s_k / (s_k + f_k); arms never played count as 0."""
        plays = self.plays
        return np.divide(
            self.successes,
            plays,
            out=np.zeros(plays.size, dtype=float),
            where=plays > 0,
        )

    def posterior_means(self) -> np.ndarray:
        """Get the Beta(s + 1, f + 1) posterior means (s + 1) / (s + f + 2)."""
        return (self.successes + 1) / (self.plays + 2)

    def best_empirical_arm(self) -> int:
        """Get the arm with the highest empirical mean; ties go to the lowest index."""
        return int(np.argmax(self.empirical_means())) + 1
