"""
Bernoulli multi-armed bandits.

Arms are indexed 1..K everywhere in the public interface.
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from ..common.exceptions import ParameterError, StructureError
from .permutation import Permutation

logger = logging.getLogger(__name__)


class BernoulliBandit:
    """
    A K-armed bandit whose arm ``k`` pays 1 with probability ``mu_k`` and 0 otherwise.

    Instances are immutable and can be shared between replications; every pull
    consumes a caller-owned random stream.
    """

    def __init__(self, means: Sequence[float]) -> None:
        """
        Initialize the bandit.

        Args:
            means (Sequence[float]): The success probabilities mu_1..mu_K.

        Raises:
            StructureError: If there are no arms or a mean lies outside [0, 1].
        """
        values = np.asarray(means, dtype=float).reshape(-1)
        if values.size < 1:
            logger.error("Attempted to create a bandit without arms.")
            raise StructureError("A bandit needs at least one arm.")
        if not np.all(np.isfinite(values)) or np.any(values < 0.0) or np.any(
            values > 1.0
        ):
            logger.error(f"Rejected bandit means outside [0, 1]: {values.tolist()}")
            raise StructureError("Every arm mean must lie in [0, 1].")
        values.setflags(write=False)
        self._means = values

    def __repr__(self) -> str:
        return f"BernoulliBandit(means={self.means})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BernoulliBandit):
            return NotImplemented
        return self.means == other.means

    def __hash__(self) -> int:
        return hash(self.means)

    @property
    def means(self) -> Tuple[float, ...]:
        return tuple(float(mu) for mu in self._means)

    @property
    def mean_array(self) -> np.ndarray:
        """The read-only array of means, indexed from 0."""
        return self._means

    @property
    def num_arms(self) -> int:
        return int(self._means.size)

    def mean(self, k: int) -> float:
        """
        Get the success probability of arm ``k``.

        Args:
            k (int): The arm index, 1..K.

        Returns:
            float: mu_k.
        """
        self._check_arm(k)
        return float(self._means[k - 1])

    def best_mean(self) -> float:
        """Get mu* = max_k mu_k."""
        return float(self._means.max())

    def best_arm(self) -> int:
        """Get the lowest-index arm achieving mu*."""
        return int(np.argmax(self._means)) + 1

    def gaps(self) -> np.ndarray:
        """Get mu* - mu_k for every arm, indexed from 0."""
        return self._means.max() - self._means

    def pull(self, k: int, rng: np.random.Generator) -> int:
        """
        Pull arm ``k`` once.

        Args:
            k (int): The arm index, 1..K.
            rng (np.random.Generator): The caller's random stream.

        Returns:
            int: 1 with probability mu_k, else 0.

        Raises:
            StructureError: If ``k`` is out of range.
        """
        self._check_arm(k)
        return int(rng.random() < self._means[k - 1])

    def pull_many(self, k: int, count: int, rng: np.random.Generator) -> np.ndarray:
        """
        Pull arm ``k`` ``count`` times in one vectorized draw.

        Args:
            k (int): The arm index, 1..K.
            count (int): The number of pulls.
            rng (np.random.Generator): The caller's random stream.

        Returns:
            np.ndarray: The rewards as an int8 array.
        """
        self._check_arm(k)
        return (rng.random(count) < self._means[k - 1]).astype(np.int8)

    def _check_arm(self, k: int) -> None:
        if not 1 <= k <= self.num_arms:
            logger.error(f"Arm {k} is out of range 1..{self.num_arms}.")
            raise StructureError(f"Arm {k} is out of range 1..{self.num_arms}.")


def sample_bandit(
    num_arms: int, rng: np.random.Generator, alpha: Optional[float] = None
) -> BernoulliBandit:
    """
    Draw a random instance: alpha ~ U[0, 1), then mu_k ~ U[0, alpha) independently.

    Args:
        num_arms (int): The number of arms K.
        rng (np.random.Generator): The random stream.
        alpha (Optional[float]): A fixed upper bound; drawn when ``None``.

    Returns:
        BernoulliBandit: The generated bandit.

    Raises:
        ParameterError: If ``num_arms`` < 1 or ``alpha`` is outside [0, 1].
    """
    if num_arms < 1:
        logger.error(f"Cannot sample a bandit with {num_arms} arms.")
        raise ParameterError("A bandit needs at least one arm.")
    if alpha is None:
        alpha = float(rng.random())
    elif not 0.0 <= alpha <= 1.0:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha}.")
    return BernoulliBandit(rng.random(num_arms) * alpha)


def genericity_violation(bandit: BernoulliBandit) -> Optional[str]:
    """
    Name the first genericity clause the bandit violates.

    Returns:
        Optional[str]: ``None`` when the bandit is generic.
    """
    means = bandit.mean_array
    if bandit.best_mean() >= 1.0:
        return "best mean must be below 1"
    if np.unique(means).size != means.size:
        return "arm means must be pairwise distinct"
    if bandit.num_arms == 2 and means.min() <= 0.0:
        return "with two arms both means must be positive"
    return None


def is_generic(bandit: BernoulliBandit) -> bool:
    """
    Check whether the bandit is generic: mu* < 1, pairwise-distinct means and,
    for K = 2, both means positive.
    """
    return genericity_violation(bandit) is None


def best_mean(bandit: BernoulliBandit) -> float:
    return bandit.best_mean()


def permute(bandit: BernoulliBandit, rho: Permutation) -> BernoulliBandit:
    """
    Relabel the arms: the result B' satisfies mu_k = mu'_{rho(k)}.

    Args:
        bandit (BernoulliBandit): The bandit B.
        rho (Permutation): The permutation acting on 1..K.

    Returns:
        BernoulliBandit: The permuted bandit B'.

    Raises:
        StructureError: If the permutation size differs from K.
    """
    if rho.size != bandit.num_arms:
        logger.error(
            f"Permutation of size {rho.size} applied to {bandit.num_arms} arms."
        )
        raise StructureError("Permutation size must equal the number of arms.")
    permuted = np.empty(bandit.num_arms)
    for k in range(1, bandit.num_arms + 1):
        permuted[rho(k) - 1] = bandit.mean_array[k - 1]
    return BernoulliBandit(permuted)
