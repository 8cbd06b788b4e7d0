"""
Random stream contract for simulations.

Every random draw in the package comes from a ``numpy.random.Generator``
created here; replication ``i`` of an experiment seeded with ``base`` uses
seed ``base + i`` so that each replication can be reproduced on its own.
"""

from typing import Optional

import numpy as np

from .constants import RNG_ALGORITHM


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """
    Create a seeded random stream.

    Args:
        seed (Optional[int]): The seed. ``None`` draws fresh OS entropy.

    Returns:
        np.random.Generator: A PCG64-backed generator.
    """
    return np.random.Generator(np.random.PCG64(seed))


def replication_seed(base_seed: int, index: int) -> int:
    """
    Derive the seed of one replication.

    Args:
        base_seed (int): The experiment's base seed.
        index (int): The zero-based replication index.

    Returns:
        int: The replication's seed.
    """
    return base_seed + index


def replication_rng(base_seed: int, index: int) -> np.random.Generator:
    """Create the private stream of replication ``index``."""
    return make_rng(replication_seed(base_seed, index))


def settlement_rng(base_seed: int, index: int) -> np.random.Generator:
    """
    Create the stream replication ``index`` uses after its horizon.

    It is spawned from the replication's seed, so it is reproducible but
    independent of the stream that produced the regret curve.
    """
    return make_rng(replication_seed(base_seed, index)).spawn(1)[0]


__all__ = ["RNG_ALGORITHM", "make_rng", "replication_seed", "replication_rng", "settlement_rng"]
