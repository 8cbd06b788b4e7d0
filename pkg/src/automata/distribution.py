"""
Finite discrete distributions.

A distribution is a tuple of ``(outcome, probability)`` pairs in a canonical
order; sampling walks the cumulative sum of that order (inverse CDF), so the
same random stream always yields the same outcome.
"""

from typing import Callable, Hashable, Iterable, Tuple, TypeVar

import numpy as np

from ..common.constants import DISTRIBUTION_TOLERANCE

T = TypeVar("T", bound=Hashable)
Distribution = Tuple[Tuple[T, float], ...]


class DistributionError(ValueError):
    """Raised when a sequence of pairs is not a probability distribution."""

    pass


def check_distribution(pairs: Iterable[Tuple[T, float]]) -> Distribution:
    """
    Validate ``pairs`` and return them as a distribution.

    Args:
        pairs (Iterable[Tuple[T, float]]): Outcomes with their probabilities.

    Returns:
        Distribution: The validated pairs, order preserved.

    Raises:
        DistributionError: If the support is empty or repeats an outcome, a
            probability is negative, or the total differs from 1 by more than
            the tolerance.
    """
    checked = tuple((outcome, float(p)) for outcome, p in pairs)
    if not checked:
        raise DistributionError("empty support")
    seen = set()
    total = 0.0
    for outcome, p in checked:
        if outcome in seen:
            raise DistributionError(f"outcome {outcome!r} listed twice")
        seen.add(outcome)
        if not p >= 0.0:
            raise DistributionError(f"negative probability {p} for {outcome!r}")
        total += p
    if abs(total - 1.0) > DISTRIBUTION_TOLERANCE:
        raise DistributionError(f"probabilities sum to {total!r}, not 1")
    return checked


def canonical(pairs: Iterable[Tuple[T, float]], key: Callable = None) -> Distribution:
    """
    Drop zero-probability outcomes, merge repeats and sort the support.

    Args:
        pairs (Iterable[Tuple[T, float]]): Outcomes with their probabilities.
        key (Callable): Sort key for outcomes; natural order when ``None``.

    Returns:
        Distribution: The validated canonical distribution.
    """
    merged = {}
    for outcome, p in pairs:
        if p > 0.0:
            merged[outcome] = merged.get(outcome, 0.0) + float(p)
    return check_distribution(sorted(merged.items(), key=lambda item: (
        key(item[0]) if key is not None else item[0]
    )))


def point_mass(outcome: T) -> Distribution:
    return ((outcome, 1.0),)


def support(distribution: Distribution) -> Tuple[T, ...]:
    return tuple(outcome for outcome, _ in distribution)


def sample(distribution: Distribution, rng: np.random.Generator) -> T:
    """
    Draw one outcome by inverse CDF over the canonical order.

    Degenerate distributions do not consume the stream.

    Args:
        distribution (Distribution): The distribution to sample.
        rng (np.random.Generator): The random stream.

    Returns:
        T: The sampled outcome.
    """
    if len(distribution) == 1:
        return distribution[0][0]
    u = rng.random()
    cumulative = 0.0
    for outcome, p in distribution:
        cumulative += p
        if u < cumulative:
            return outcome
    # Rounding can leave the total a hair below 1.
    for outcome, p in reversed(distribution):
        if p > 0.0:
            return outcome
    return distribution[-1][0]
