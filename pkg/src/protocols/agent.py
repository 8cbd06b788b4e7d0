"""
Base class for bandit-playing agents.
"""

import logging
from typing import Optional

import numpy as np

from ..common.exceptions import CallOrderError, ParameterError, StructureError

logger = logging.getLogger(__name__)


class Agent:
    """
    A protocol playing a K-armed bandit, one ``choose``/``observe`` pair per step.

    Subclasses implement ``_select``, ``_update`` and ``exploit_choice``. Agents
    are single-threaded mutable objects; use one per replication.

    Attributes:
        num_arms (int): The number of arms K.
        steps (int): The number of completed choose/observe pairs.
    """

    name = "agent"

    def __init__(self, num_arms: int) -> None:
        """
        Initialize the agent.

        Args:
            num_arms (int): The number of arms K.

        Raises:
            ParameterError: If ``num_arms`` < 1.
        """
        if num_arms < 1:
            logger.error(f"Attempted to create an agent for {num_arms} arms.")
            raise ParameterError("An agent needs at least one arm.")
        self.num_arms = int(num_arms)
        self.steps = 0
        self._pending: Optional[int] = None

    def __repr__(self) -> str:
        return f"{type(self).__name__}(num_arms={self.num_arms}, steps={self.steps})"

    def choose(self, rng: np.random.Generator) -> int:
        """
        Pick the arm to play next.

        Args:
            rng (np.random.Generator): The replication's random stream.

        Returns:
            int: An arm index in 1..K.

        Raises:
            CallOrderError: If the previous choice has not been observed yet.
        """
        if self._pending is not None:
            logger.error(f"{self!r}: choose called twice without observe.")
            raise CallOrderError("choose called again before observing the last arm.")
        arm = self._select(rng)
        self._pending = arm
        return arm

    def observe(self, arm: int, reward: int, rng: np.random.Generator) -> None:
        """
        Feed back the reward of the arm just chosen.

        Args:
            arm (int): The arm returned by the last ``choose``.
            reward (int): The reward, 0 or 1.
            rng (np.random.Generator): The replication's random stream.

        Raises:
            CallOrderError: If ``arm`` is not the pending choice.
            StructureError: If ``reward`` is not 0 or 1.
        """
        if self._pending is None or arm != self._pending:
            logger.error(
                f"{self!r}: observed arm {arm} but pending choice is {self._pending}."
            )
            raise CallOrderError(
                f"observe({arm}) does not match the pending choice {self._pending}."
            )
        if reward not in (0, 1):
            raise StructureError(f"Reward must be 0 or 1, got {reward}.")
        self._pending = None
        self.steps += 1
        self._update(arm, int(reward), rng)

    @property
    def committed_arm(self) -> Optional[int]:
        """The arm played forever from now on, if the agent has committed."""
        return None

    def exploit_choice(self) -> int:
        """Get the arm the agent would commit to now."""
        raise NotImplementedError("Subclasses must implement this method.")

    def action_probabilities(self) -> np.ndarray:
        """
        Get the law of the next choice, indexed from 0.

        Deterministic agents put all mass on ``exploit_choice``.
        """
        probabilities = np.zeros(self.num_arms)
        probabilities[self.exploit_choice() - 1] = 1.0
        return probabilities

    def _select(self, rng: np.random.Generator) -> int:
        raise NotImplementedError("Subclasses must implement this method.")

    def _update(self, arm: int, reward: int, rng: np.random.Generator) -> None:
        raise NotImplementedError("Subclasses must implement this method.")


def require(condition: bool, message: str) -> None:
    """Raise a ParameterError with ``message`` unless ``condition`` holds."""
    if not condition:
        logger.error(message)
        raise ParameterError(message)
