"""
The elimination tournament.

The champion (initially arm 1) and the challenger (initially arm 2) are
played alternately. A counter gains 1 on a champion success and loses 1 on a
challenger success; at +M the challenger is eliminated, at -M the champion is
replaced. After every full round the comparison also stops with probability
1/N, the leader by counter sign surviving (ties keep the champion). The
survivor then faces the next arm in index order, and after the last
comparison it is played forever.
"""

import logging
from dataclasses import dataclass
from enum import IntEnum
from typing import Optional

import numpy as np

from ..common.constants import DEFAULT_COUNTER_THRESHOLD, DEFAULT_STOP_PARAMETER
from .agent import Agent, require

logger = logging.getLogger(__name__)


class Turn(IntEnum):
    """Which side of the comparison plays next."""

    CHAMPION = 0
    CHALLENGER = 1


@dataclass
class EliminationState:
    """
    The state of an elimination tournament.

    Attributes:
        champion (int): The incumbent arm.
        challenger (int): The arm it is being compared with.
        turn (Turn): Which of the two plays next.
        c (int): Champion successes minus challenger successes, |c| <= M.
        winner (Optional[int]): The arm played forever once the tournament is over.
    """

    champion: int = 1
    challenger: int = 2
    turn: Turn = Turn.CHAMPION
    c: int = 0
    winner: Optional[int] = None


class EliminationAgent(Agent):
    """
    Elimination-tournament agent.

    Attributes:
        threshold (int): The counter threshold M.
        stop_parameter (int): N; a comparison stops with probability 1/N per round.
        comparisons (int): The number of comparisons settled so far.
        state (EliminationState): The current tournament state.
    """

    name = "elimination"

    def __init__(
        self,
        num_arms: int,
        threshold: int = DEFAULT_COUNTER_THRESHOLD,
        stop_parameter: int = DEFAULT_STOP_PARAMETER,
    ) -> None:
        """
        Initialize the tournament with arm 1 against arm 2.

        Args:
            num_arms (int): The number of arms K, at least 2.
            threshold (int): The counter threshold M.
            stop_parameter (int): The stop parameter N.

        Raises:
            ParameterError: If K < 2, M < 1 or N < 1.
        """
        super().__init__(num_arms)
        require(num_arms >= 2, f"The tournament needs at least 2 arms, got {num_arms}.")
        require(threshold >= 1, f"Counter threshold M must be at least 1, got {threshold}.")
        require(
            stop_parameter >= 1,
            f"Stop parameter N must be at least 1, got {stop_parameter}.",
        )
        self.threshold = int(threshold)
        self.stop_parameter = int(stop_parameter)
        self.stop_probability = 1.0 / self.stop_parameter
        self.comparisons = 0
        self.state = EliminationState()

    @property
    def committed_arm(self) -> Optional[int]:
        return self.state.winner

    def exploit_choice(self) -> int:
        state = self.state
        if state.winner is not None:
            return state.winner
        return state.champion if state.turn == Turn.CHAMPION else state.challenger

    def _select(self, rng: np.random.Generator) -> int:
        return self.exploit_choice()

    def _update(self, arm: int, reward: int, rng: np.random.Generator) -> None:
        state = self.state
        if state.winner is not None:
            return
        if state.turn == Turn.CHAMPION:
            state.c += reward
            state.turn = Turn.CHALLENGER
            if state.c >= self.threshold:
                self._settle(state.champion)
            return

        state.c -= reward
        state.turn = Turn.CHAMPION
        if state.c <= -self.threshold:
            self._settle(state.challenger)
        elif rng.random() < self.stop_probability:
            self._settle(state.champion if state.c >= 0 else state.challenger)

    def _settle(self, survivor: int) -> None:
        state = self.state
        self.comparisons += 1
        logger.debug(
            f"Comparison {state.champion} vs {state.challenger} won by arm {survivor} "
            f"(c={state.c}) after {self.steps} steps"
        )
        if state.challenger >= self.num_arms:
            state.winner = survivor
            return
        state.champion = survivor
        state.challenger += 1
        state.turn = Turn.CHAMPION
        state.c = 0


def elimination_agent(
    num_arms: int,
    threshold: int = DEFAULT_COUNTER_THRESHOLD,
    stop_parameter: int = DEFAULT_STOP_PARAMETER,
) -> EliminationAgent:
    return EliminationAgent(num_arms, threshold, stop_parameter)
