"""
Aggregation of regret curves across replications.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..common.exceptions import StructureError
from .regret import RegretTrace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AggregateCurve:
    """
    Mean cumulative regret over replications on a step grid.

    Attributes:
        steps (np.ndarray): The steps sampled, increasing, 1-based.
        mean (np.ndarray): Mean cumulative pseudo-regret at each step.
        stderr (np.ndarray): Standard error of the mean, 0 for a single replication.
        reps (int): The number of replications.
    """

    steps: np.ndarray
    mean: np.ndarray
    stderr: np.ndarray
    reps: int

    def at(self, step: int) -> float:
        """Get the mean at ``step``, which must be on the grid."""
        index = np.searchsorted(self.steps, step)
        if index >= self.steps.size or self.steps[index] != step:
            raise StructureError(f"Step {step} is not on the curve's grid.")
        return float(self.mean[index])

    @property
    def final_mean(self) -> float:
        return float(self.mean[-1])


def step_grid(horizon: int, stride: int) -> np.ndarray:
    """
    Get the steps stride, 2 * stride, ... with ``horizon`` always last.

    Raises:
        StructureError: If horizon or stride is below 1.
    """
    if horizon < 1 or stride < 1:
        raise StructureError(f"Need horizon >= 1 and stride >= 1, got {horizon}, {stride}.")
    steps = np.arange(stride, horizon + 1, stride, dtype=np.int64)
    if steps.size == 0 or steps[-1] != horizon:
        steps = np.append(steps, horizon)
    return steps


def aggregate_samples(samples: np.ndarray, steps: np.ndarray) -> AggregateCurve:
    """
    Average cumulative regret sampled on a shared grid.

    Args:
        samples (np.ndarray): One row per replication, one column per step.
        steps (np.ndarray): The grid the columns were sampled on.

    Returns:
        AggregateCurve: Pointwise mean and standard error.

    Raises:
        StructureError: If there are no rows or the shapes disagree.
    """
    samples = np.atleast_2d(np.asarray(samples, dtype=float))
    if samples.shape[0] == 0 or samples.size == 0:
        logger.error("Attempted to aggregate an empty set of traces.")
        raise StructureError("Cannot aggregate an empty set of traces.")
    if samples.shape[1] != len(steps):
        raise StructureError(
            f"Samples have {samples.shape[1]} columns for {len(steps)} steps."
        )
    reps = samples.shape[0]
    mean = samples.mean(axis=0)
    if reps > 1:
        stderr = samples.std(axis=0, ddof=1) / np.sqrt(reps)
    else:
        stderr = np.zeros_like(mean)
    return AggregateCurve(
        steps=np.asarray(steps, dtype=np.int64), mean=mean, stderr=stderr, reps=reps
    )


def aggregate(
    traces: Sequence[RegretTrace], steps: Optional[np.ndarray] = None
) -> AggregateCurve:
    """
    Average cumulative pseudo-regret over traces of one horizon.

    Args:
        traces (Sequence[RegretTrace]): The replications.
        steps (Optional[np.ndarray]): Grid to sample; every step by default.

    Returns:
        AggregateCurve: Pointwise mean and standard error.

    Raises:
        StructureError: If ``traces`` is empty or the horizons differ.
    """
    if not traces:
        logger.error("Attempted to aggregate an empty set of traces.")
        raise StructureError("Cannot aggregate an empty set of traces.")
    horizons = {trace.horizon for trace in traces}
    if len(horizons) != 1:
        raise StructureError(f"Traces have different horizons {sorted(horizons)}.")
    if steps is None:
        steps = np.arange(1, traces[0].horizon + 1)
    samples = np.stack([trace.cumulative[np.asarray(steps) - 1] for trace in traces])
    return aggregate_samples(samples, steps)


def tail_slope(curve: AggregateCurve, fraction: float = 0.2) -> float:
    """
    Fit a line to the last ``fraction`` of the curve's grid.

    For a protocol that has committed for good the slope is its final gap.

    Args:
        curve (AggregateCurve): The curve.
        fraction (float): Share of grid points used, in (0, 1].

    Returns:
        float: Regret per step over the tail.
    """
    if not 0.0 < fraction <= 1.0:
        raise StructureError(f"Fraction must lie in (0, 1], got {fraction}.")
    count = max(int(round(len(curve.steps) * fraction)), 2)
    if len(curve.steps) < 2:
        raise StructureError("A slope needs at least two grid points.")
    slope, _ = np.polyfit(curve.steps[-count:], curve.mean[-count:], 1)
    return float(slope)
