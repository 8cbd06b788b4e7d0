"""
Permutations of arm indices.

A permutation ``rho`` is stored as the tuple of images ``(rho(1), ..., rho(K))``.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from ..common.exceptions import StructureError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    """
    A bijection on the arm indices 1..K.

    Attributes:
        mapping (Tuple[int, ...]): ``mapping[k - 1]`` is the image of arm ``k``.
    """

    mapping: Tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(int(k) for k in self.mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            logger.error(f"Rejected non-bijective arm mapping {mapping}")
            raise StructureError(f"Mapping {mapping} is not a bijection on 1..K.")
        object.__setattr__(self, "mapping", mapping)

    @property
    def size(self) -> int:
        return len(self.mapping)

    def __call__(self, k: int) -> int:
        return self.mapping[k - 1]

    def inverse(self) -> "Permutation":
        """
        Get the inverse permutation.

        Returns:
            Permutation: The permutation ``rho^-1`` with ``rho^-1(rho(k)) = k``.
        """
        inverse = [0] * self.size
        for k, image in enumerate(self.mapping, start=1):
            inverse[image - 1] = k
        return Permutation(tuple(inverse))

    def is_identity(self) -> bool:
        return all(image == k for k, image in enumerate(self.mapping, start=1))

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def swap(cls, size: int, i: int, j: int) -> "Permutation":
        """
        Create the transposition of arms ``i`` and ``j``.

        Args:
            size (int): The number of arms.
            i (int): The first arm.
            j (int): The second arm.

        Returns:
            Permutation: The transposition.
        """
        mapping = list(range(1, size + 1))
        mapping[i - 1], mapping[j - 1] = j, i
        return cls(tuple(mapping))

    @classmethod
    def random(cls, size: int, rng: np.random.Generator) -> "Permutation":
        return cls(tuple(int(k) + 1 for k in rng.permutation(size)))


def all_permutations(size: int) -> Iterator[Permutation]:
    """Iterate over all K! permutations in lexicographic order."""
    for mapping in itertools.permutations(range(1, size + 1)):
        yield Permutation(mapping)


def permutation_sample(
    size: int, limit: int, rng: np.random.Generator
) -> List[Permutation]:
    """
    Get every permutation, or ``limit`` random ones when K! exceeds ``limit``.

    The identity is always included first.

    Args:
        size (int): The number of arms K.
        limit (int): The largest number of permutations to return.
        rng (np.random.Generator): The stream used for sampling.

    Returns:
        List[Permutation]: The permutations to examine.
    """
    if math.factorial(size) <= limit:
        return list(all_permutations(size))

    chosen = [Permutation.identity(size)]
    seen = {chosen[0].mapping}
    while len(chosen) < limit:
        candidate = Permutation.random(size, rng)
        if candidate.mapping not in seen:
            seen.add(candidate.mapping)
            chosen.append(candidate)
    return chosen
