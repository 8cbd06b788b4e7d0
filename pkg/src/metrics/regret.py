"""
Regret accounting.

Pseudo-regret charges each step the gap mu* - mu_{a_t} of the arm played;
realized regret uses the rewards actually drawn and is kept for diagnostics.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..bandit.bernoulli import BernoulliBandit
from ..common.exceptions import StructureError
from ..protocols.agent import Agent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegretTrace:
    """
    Per-step regret of one execution.

    Attributes:
        actions (np.ndarray): The arm a_t played at each step.
        increments (np.ndarray): mu* - mu_{a_t}, each in [0, mu*].
        cumulative (np.ndarray): Prefix sums of ``increments``.
        rewards (np.ndarray): The realized rewards.
        best_mean (float): mu* of the bandit played.
    """

    actions: np.ndarray
    increments: np.ndarray
    cumulative: np.ndarray
    rewards: np.ndarray
    best_mean: float

    @classmethod
    def from_run(
        cls, actions: np.ndarray, rewards: np.ndarray, bandit: BernoulliBandit
    ) -> "RegretTrace":
        """
        Account one execution.

        Args:
            actions (np.ndarray): Arms played, 1..K.
            rewards (np.ndarray): Rewards received, same length.
            bandit (BernoulliBandit): The bandit played.

        Returns:
            RegretTrace: The trace.

        Raises:
            StructureError: If the lengths differ or an arm is out of range.
        """
        actions = np.asarray(actions, dtype=np.int64)
        rewards = np.asarray(rewards, dtype=np.int8)
        if actions.shape != rewards.shape:
            raise StructureError(
                f"{actions.size} actions but {rewards.size} rewards."
            )
        if actions.size and (actions.min() < 1 or actions.max() > bandit.num_arms):
            raise StructureError(f"Actions must lie in 1..{bandit.num_arms}.")
        increments = bandit.gaps()[actions - 1]
        return cls(
            actions=actions,
            increments=increments,
            cumulative=np.cumsum(increments),
            rewards=rewards,
            best_mean=bandit.best_mean(),
        )

    @property
    def horizon(self) -> int:
        return int(self.actions.size)

    def regret(self, n: int) -> float:
        """Get Reg after the first ``n`` steps."""
        return float(self.cumulative[n - 1]) if n > 0 else 0.0

    def average_regret(self, n: int) -> float:
        """Get AReg = Reg / n after the first ``n`` steps."""
        return self.regret(n) / n

    def realized_regret(self) -> float:
        """Get N mu* minus the rewards actually collected."""
        return self.horizon * self.best_mean - float(self.rewards.sum())


def pseudo_regret(actions: np.ndarray, bandit: BernoulliBandit, n: int) -> float:
    """
    Compute N mu* - sum_{t <= N} mu_{a_t}.

    Args:
        actions (np.ndarray): The arm sequence, 1..K.
        bandit (BernoulliBandit): The bandit.
        n (int): The number of leading steps to charge.

    Returns:
        float: The pseudo-regret.

    Raises:
        StructureError: If ``n`` exceeds the number of actions.
    """
    actions = np.asarray(actions, dtype=np.int64)
    if n > actions.size:
        logger.error(f"Asked for regret over {n} steps of a {actions.size}-step trace.")
        raise StructureError(f"Only {actions.size} actions recorded, need {n}.")
    return float(bandit.gaps()[actions[:n] - 1].sum())


def final_gap(agent: Agent, bandit: BernoulliBandit) -> float:
    """Get mu* - mu of the arm ``agent`` would commit to now."""
    return bandit.best_mean() - bandit.mean(agent.exploit_choice())


def policy_gap(agent: Agent, bandit: BernoulliBandit) -> float:
    """
    Get the expected gap of the agent's next choice.

    Equal to ``final_gap`` for deterministic agents; for epsilon-greedy it is
    (1 - eps) * gap(argmax) + eps * mean gap.
    """
    return float(np.dot(agent.action_probabilities(), bandit.gaps()))


def limiting_gap(agent: Agent, bandit: BernoulliBandit) -> float:
    """
    Get the gap that average regret tends to if the agent keeps its current policy.

    A committed agent plays its arm forever, so this is that arm's gap; for an
    agent that never commits (epsilon-greedy, Thompson) it is ``policy_gap``.
    """
    committed = agent.committed_arm
    if committed is not None:
        return bandit.best_mean() - bandit.mean(committed)
    return policy_gap(agent, bandit)
