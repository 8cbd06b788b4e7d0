"""
Test cases for the shared helpers.
"""

import sys
import time
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

import numpy as np

from src.common.exceptions import (
    BanditAutomataError,
    CallOrderError,
    ConfigError,
    GenericityError,
    ParameterError,
    PfaFormatError,
    StructureError,
)
from src.common.rng import make_rng, replication_rng, replication_seed, settlement_rng
from src.common.timer import Timer


def test_rng_is_pcg64_and_seeded():
    """Test that equal seeds give equal streams."""
    first = make_rng(7)
    second = make_rng(7)
    assert isinstance(first.bit_generator, np.random.PCG64)
    assert np.array_equal(first.random(5), second.random(5))
    assert not np.array_equal(make_rng(8).random(5), make_rng(7).random(5))


def test_replication_streams():
    """Test that replication i is seeded with base + i."""
    assert replication_seed(100, 3) == 103
    assert np.array_equal(replication_rng(100, 3).random(4), make_rng(103).random(4))


def test_settlement_streams():
    """Test that play past the horizon has its own reproducible stream."""
    assert np.array_equal(settlement_rng(100, 3).random(4), settlement_rng(100, 3).random(4))
    assert not np.array_equal(settlement_rng(100, 3).random(4), replication_rng(100, 3).random(4))
    assert not np.array_equal(settlement_rng(100, 3).random(4), settlement_rng(100, 4).random(4))


def test_timer():
    """Test the elapsed time and the rate of a timed block."""
    with Timer() as timer:
        time.sleep(0.01)
    elapsed = timer.elapsed()
    assert elapsed >= 0.01
    assert timer.elapsed() == elapsed
    assert timer.rate(100) == 100 / elapsed
    instant = Timer()
    instant.started = instant.stopped = 5.0
    assert instant.rate(10) == float("inf")


def test_exception_hierarchy():
    """Test that every error is catchable at the base class."""
    assert issubclass(ParameterError, StructureError)
    assert issubclass(CallOrderError, StructureError)
    assert issubclass(GenericityError, ConfigError)
    for error in (StructureError, PfaFormatError, ConfigError):
        assert issubclass(error, BanditAutomataError)
    assert not issubclass(PfaFormatError, StructureError)
