"""
The aspiration-level protocol.

The agent tests one arm at a time against a virtual arm that pays 1 with
probability (r - 0.5) / m, where r is the current aspiration rank. A counter
tracks how far the real arm is ahead of the virtual one: reaching the accept
threshold M1 commits to the arm for good, reaching -M2 moves on to the next
arm, and when every arm has lost the rank is lowered and the search restarts
from arm 1.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..common.constants import (
    DEFAULT_ACCEPT_THRESHOLD,
    DEFAULT_COARSE_ACCEPT_THRESHOLD,
    DEFAULT_COARSE_REJECT_THRESHOLD,
    DEFAULT_RANKS,
    DEFAULT_REJECT_THRESHOLD,
)
from .agent import Agent, require

logger = logging.getLogger(__name__)


def virtual_probability(rank: int, ranks: int) -> float:
    """Get the success probability of the virtual arm at ``rank``: (r - 0.5) / m."""
    return (rank - 0.5) / ranks


@dataclass
class AspirationState:
    """
    The state (r, k, c) of an aspiration-level search.

    Attributes:
        r (int): The aspiration rank, 1..m.
        k (int): The arm under test, 1..K.
        c (int): The counter, -M2 < c <= M1.
        committed (Optional[int]): The accepted arm once c has reached M1.
    """

    r: int
    k: int
    c: int = 0
    committed: Optional[int] = None


class AspirationAgent(Agent):
    """
    Aspiration-level agent with a fixed rank decrement.

    Attributes:
        ranks (int): The number of ranks m.
        accept (int): The accept threshold M1.
        reject (int): The reject magnitude M2; the counter's lower bound is -M2.
        decrement (int): How far the rank drops after a full failed pass.
        state (AspirationState): The current (r, k, c).
    """

    name = "aspiration"

    def __init__(
        self,
        num_arms: int,
        ranks: int = DEFAULT_RANKS,
        accept: int = DEFAULT_ACCEPT_THRESHOLD,
        reject: int = DEFAULT_REJECT_THRESHOLD,
        decrement: int = 1,
    ) -> None:
        """
        Initialize the agent in state (m, 1, 0).

        Args:
            num_arms (int): The number of arms K.
            ranks (int): The number of ranks m.
            accept (int): The accept threshold M1.
            reject (int): The reject magnitude M2.
            decrement (int): The rank decrement per failed pass.

        Raises:
            ParameterError: If a parameter is below 1.
        """
        super().__init__(num_arms)
        require(ranks >= 1, f"Number of ranks m must be at least 1, got {ranks}.")
        require(accept >= 1, f"Accept threshold M1 must be at least 1, got {accept}.")
        require(reject >= 1, f"Reject threshold M2 must be at least 1, got {reject}.")
        require(decrement >= 1, f"Rank decrement must be at least 1, got {decrement}.")
        self.ranks = int(ranks)
        self.accept = int(accept)
        self.reject = int(reject)
        self.decrement = int(decrement)
        self.state = AspirationState(r=self.ranks, k=1)

    @property
    def committed_arm(self) -> Optional[int]:
        return self.state.committed

    def exploit_choice(self) -> int:
        if self.state.committed is not None:
            return self.state.committed
        return self.state.k

    def _select(self, rng: np.random.Generator) -> int:
        return self.exploit_choice()

    def _update(self, arm: int, reward: int, rng: np.random.Generator) -> None:
        state = self.state
        if state.committed is not None:
            return
        p = virtual_probability(state.r, self.ranks)
        u = rng.random()
        if reward == 1:
            # The real arm gains on the virtual arm when the virtual one fails.
            if u < 1.0 - p:
                state.c += 1
                if state.c >= self.accept:
                    self._accept()
        elif u < p:
            state.c -= 1
            if state.c <= -self.reject:
                self._reject()

    def _accept(self) -> None:
        self.state.committed = self.state.k
        logger.debug(
            f"Committed to arm {self.state.k} at rank {self.state.r} "
            f"after {self.steps} steps"
        )

    def _reject(self) -> None:
        state = self.state
        if state.k < self.num_arms:
            state.k += 1
        else:
            state.r = max(state.r - self.decrement, 1)
            state.k = 1
        state.c = 0


class TwoPhaseAspirationAgent(AspirationAgent):
    """
    Aspiration-level agent with a coarse preprocessing phase.

    The coarse phase lowers the rank by floor(sqrt(m)) per failed pass with
    loose thresholds (M1', M2'). The first arm to beat the virtual arm at rank
    r sends the search back to rank min(m, r + floor(sqrt(m))), where a fine
    phase with decrement 1 and thresholds (M1, M2) runs; a fine-phase accept
    is final.
    """

    name = "aspiration2"

    def __init__(
        self,
        num_arms: int,
        ranks: int = DEFAULT_RANKS,
        accept: int = DEFAULT_ACCEPT_THRESHOLD,
        reject: int = DEFAULT_REJECT_THRESHOLD,
        coarse_accept: int = DEFAULT_COARSE_ACCEPT_THRESHOLD,
        coarse_reject: int = DEFAULT_COARSE_REJECT_THRESHOLD,
    ) -> None:
        require(
            coarse_accept >= 1,
            f"Coarse accept threshold M1' must be at least 1, got {coarse_accept}.",
        )
        require(
            coarse_reject >= 1,
            f"Coarse reject threshold M2' must be at least 1, got {coarse_reject}.",
        )
        super().__init__(num_arms, ranks, accept, reject)
        self.coarse_step = max(math.isqrt(self.ranks), 1)
        self.fine_accept = self.accept
        self.fine_reject = self.reject
        self.coarse = True
        self.accept = int(coarse_accept)
        self.reject = int(coarse_reject)
        self.decrement = self.coarse_step

    def _accept(self) -> None:
        if not self.coarse:
            super()._accept()
            return
        state = self.state
        restart = min(self.ranks, state.r + self.coarse_step)
        logger.debug(
            f"Arm {state.k} passed the coarse search at rank {state.r}; "
            f"fine search restarts at rank {restart}"
        )
        self.coarse = False
        self.accept = self.fine_accept
        self.reject = self.fine_reject
        self.decrement = 1
        state.r = restart
        state.k = 1
        state.c = 0


def aspiration_agent(
    num_arms: int,
    ranks: int = DEFAULT_RANKS,
    accept: int = DEFAULT_ACCEPT_THRESHOLD,
    reject: int = DEFAULT_REJECT_THRESHOLD,
) -> AspirationAgent:
    return AspirationAgent(num_arms, ranks, accept, reject)


def aspiration_two_phase(
    num_arms: int,
    ranks: int = DEFAULT_RANKS,
    accept: int = DEFAULT_ACCEPT_THRESHOLD,
    reject: int = DEFAULT_REJECT_THRESHOLD,
    coarse_accept: int = DEFAULT_COARSE_ACCEPT_THRESHOLD,
    coarse_reject: int = DEFAULT_COARSE_REJECT_THRESHOLD,
) -> TwoPhaseAspirationAgent:
    return TwoPhaseAspirationAgent(
        num_arms, ranks, accept, reject, coarse_accept, coarse_reject
    )
