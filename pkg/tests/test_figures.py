"""
Full-scale reproductions of the regret figures.

Every setting runs 100 replications of 50,000 steps on fresh 50-armed bandits,
so these checks take minutes; deselect them with ``-m "not slow"``.
"""

import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

import pytest

from src.harness.sweep import figure_sweep

WORKERS = 4


def gaps(results):
    """Get the mean final gap of every setting of a sweep."""
    return {label: result.mean_final_gap for label, result in results.items()}


@pytest.mark.slow
def test_rank_sweep():
    """Test the final gaps as the number of ranks grows."""
    results = figure_sweep("m", workers=WORKERS)
    gap = gaps(results)
    for result in results.values():
        assert result.extras["committed_replications"] + result.extras[
            "settled_replications"
        ] >= 95
    # m = 50 settles near 0.01 rather than at twice the m = 100 gap
    assert 0.0 < gap["m50"] < 0.02
    assert gap["m100"] == pytest.approx(0.007, abs=0.006)
    assert gap["m200"] == pytest.approx(0.0068, abs=0.005)
    assert gap["m500"] == pytest.approx(0.0065, abs=0.005)
    assert gap["m500"] < gap["m100"]


@pytest.mark.slow
def test_elimination_sweep():
    """Test that a shorter comparison budget costs more than any counter threshold."""
    results = figure_sweep("elimination", workers=WORKERS)
    gap = gaps(results)
    expected = {
        "N1000_M10": 0.01,
        "N1000_M20": 0.007,
        "N1000_M100": 0.006,
        "N100_M10": 0.03,
        "N100_M20": 0.03,
    }
    for label, value in expected.items():
        assert gap[label] == pytest.approx(value, abs=0.01), label
    short = [gap["N100_M10"], gap["N100_M20"]]
    long = [gap["N1000_M10"], gap["N1000_M20"], gap["N1000_M100"]]
    assert min(short) > max(long)


@pytest.mark.slow
def test_protocol_comparison():
    """Test the ordering of the four protocols on the summary gap."""
    results = figure_sweep("compare", workers=WORKERS)
    gap = gaps(results)
    assert gap["elimination"] == pytest.approx(0.007, abs=0.005)
    assert gap["aspiration2"] == pytest.approx(0.008, abs=0.005)
    assert gap["thompson"] == pytest.approx(0.003, abs=0.003)
    assert gap["egreedy"] > gap["elimination"]
    assert gap["egreedy"] > gap["aspiration2"]
    assert gap["thompson"] < min(gap["elimination"], gap["aspiration2"], gap["egreedy"])
    assert gap["egreedy"] == pytest.approx(results["egreedy"].extras["mean_policy_gap"])
