"""
Wall-clock timing for experiments, compilations and benchmarks.
"""

import time
from typing import Optional


class Timer:
    """
    Context manager measuring the wall-clock duration of a block.

    Attributes:
        started (float): perf_counter reading when the block was entered.
        stopped (float | None): perf_counter reading when the block was left,
            None while the block is still running.
    """

    def __init__(self):
        self.started = 0.0
        self.stopped: Optional[float] = None

    def __enter__(self) -> "Timer":
        self.started = time.perf_counter()
        self.stopped = None
        return self

    def __exit__(self, *exc_info) -> None:
        self.stopped = time.perf_counter()

    def elapsed(self) -> float:
        """Seconds spent in the block so far."""
        end = time.perf_counter() if self.stopped is None else self.stopped
        return end - self.started

    def rate(self, count: int) -> float:
        """
        Get a throughput for the timed block.

        Args:
            count (int): Units of work done inside the block (steps, states).

        Returns:
            float: Units per second, or infinity for an unmeasurably short block.
        """
        seconds = self.elapsed()
        return count / seconds if seconds > 0 else float("inf")
