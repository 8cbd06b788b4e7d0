"""
Long-run regret growth of the infinite-state baseline against fixed automata.
"""

import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

import numpy as np
import pytest

from src.bandit.bernoulli import BernoulliBandit
from src.common.rng import replication_rng
from src.harness.config import ExperimentConfig
from src.harness.simulation import play, run_experiment
from src.metrics.aggregate import tail_slope
from src.protocols.thompson import ThompsonAgent

MEANS = (0.5, 0.45, 0.3, 0.6, 0.2)


def doubling_increments(result, windows):
    """Get the mean of Reg(2N) - Reg(N) over the replications for each N."""
    steps = result.curve.steps.tolist()
    curves = np.stack([replication.curve for replication in result.replications])
    increments = {}
    for n in windows:
        samples = curves[:, steps.index(2 * n)] - curves[:, steps.index(n)]
        increments[n] = float(samples.mean())
    return increments


@pytest.mark.slow
def test_thompson_regret_increments_shrink():
    """Test that each doubling of the horizon adds less regret than the one before."""
    config = ExperimentConfig(
        protocol="thompson",
        arms=5,
        means=MEANS,
        horizon=20_000,
        reps=200,
        seed=0,
        stride=2_500,
        workers=4,
    )
    result = run_experiment(config)
    increments = doubling_increments(result, (2_500, 5_000, 10_000))
    means = [increments[n] for n in (2_500, 5_000, 10_000)]
    assert means[0] > means[1] > means[2] > 0.0
    assert result.curve.at(20_000) / 20_000 < 0.5 * result.curve.at(2_500) / 2_500


@pytest.mark.slow
@pytest.mark.parametrize(
    "protocol, params",
    [
        ("aspiration", {"m": 5, "m1": 2, "m2": 1}),
        ("elimination", {"M": 3, "N": 10}),
    ],
)
def test_fixed_automaton_regret_is_linear(protocol, params):
    """Test that a small automaton's regret grows at its final gap in the tail."""
    config = ExperimentConfig(
        protocol=protocol,
        arms=5,
        means=MEANS,
        horizon=20_000,
        reps=100,
        seed=0,
        stride=500,
        workers=4,
        params=params,
    )
    result = run_experiment(config)
    assert result.extras["committed_replications"] == 100
    assert result.extras["mean_commitment_step"] < 16_000
    assert result.mean_final_gap > 0.01
    assert tail_slope(result.curve) == pytest.approx(result.mean_final_gap, rel=0.2)


@pytest.mark.slow
def test_thompson_settles_on_the_best_arm():
    """Test that Thompson Sampling plays the better of (0.9, 0.1) late in the run."""
    bandit = BernoulliBandit([0.9, 0.1])
    shares = []
    for index in range(100):
        actions, _, _ = play(ThompsonAgent(2), bandit, 10_000, replication_rng(0, index))
        shares.append(np.mean(actions[9_000:] == 1))
    assert np.mean(shares) >= 0.95


@pytest.mark.slow
def test_thompson_simulation_gap():
    """Test the summary gap of a Thompson Sampling run on an easy bandit."""
    config = ExperimentConfig(
        protocol="thompson", arms=2, means=(0.9, 0.1), horizon=10_000, reps=100, seed=0
    )
    result = run_experiment(config)
    assert result.mean_final_gap <= 0.02
    assert result.extras["committed_replications"] == 0
