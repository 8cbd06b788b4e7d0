"""
Test cases for replicated simulation, sweeps and result files.
"""

import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

import numpy as np
import pandas as pd
import pytest
import yaml

from src.bandit.bernoulli import BernoulliBandit
from src.common.exceptions import ConfigError
from src.common.rng import make_rng
from src.harness.config import ExperimentConfig
from src.harness.output import CURVE_COLUMNS, SUMMARY_COLUMNS, read_curve
from src.harness.plot import plot_curves
from src.harness.simulation import play, run_experiment, run_replication
from src.harness.sweep import figure_settings, figure_sweep
from src.protocols.explore_exploit import ExploreThenExploitAgent


def small_config(**overrides) -> ExperimentConfig:
    """Get a quick aspiration experiment on a fixed two-armed bandit."""
    values = dict(
        protocol="aspiration",
        means=(0.3, 0.7),
        arms=2,
        horizon=300,
        reps=4,
        seed=1,
        stride=50,
        params={"m": 10, "m1": 3, "m2": 2},
    )
    values.update(overrides)
    return ExperimentConfig(**values)


def test_play_stops_consulting_committed_agent():
    """Test that commitment is detected and the rest drawn in one block."""
    agent = ExploreThenExploitAgent(2, exploration=3)
    bandit = BernoulliBandit([0.2, 0.9])
    actions, rewards, committed_step = play(agent, bandit, 100, make_rng(0))
    assert committed_step == 6
    assert actions[:6].tolist() == [1, 2, 1, 2, 1, 2]
    assert np.all(actions[6:] == agent.committed_arm)
    assert agent.steps == 6
    assert set(np.unique(rewards)) <= {0, 1}


def test_run_replication_is_reproducible():
    """Test that one replication can be rerun on its own."""
    config = small_config()
    first = run_replication(config, 2)
    second = run_replication(config, 2)
    assert first.index == 2
    assert np.array_equal(first.curve, second.curve)
    assert first.final_gap == second.final_gap
    assert first.curve.size == 6


def test_run_experiment_writes_files(tmp_path):
    """Test the result files and their agreement with each other."""
    result = run_experiment(small_config(out=str(tmp_path)))
    curve = read_curve(tmp_path / "curve.csv")
    summary = pd.read_csv(tmp_path / "summary.csv")
    assert tuple(curve.columns) == CURVE_COLUMNS
    assert tuple(summary.columns) == SUMMARY_COLUMNS
    assert curve["step"].tolist() == [50, 100, 150, 200, 250, 300]
    assert np.all(curve["reps"] == 4)
    assert np.all(np.diff(curve["mean_cum_regret"]) >= 0)
    assert curve["mean_cum_regret"].iloc[-1] == pytest.approx(
        summary["mean_cum_regret_at_horizon"].iloc[0]
    )
    assert summary["params"].iloc[0] == "m=10;m1=3;m2=2"
    assert summary["mean_final_gap"].iloc[0] == pytest.approx(result.mean_final_gap)

    metadata = yaml.safe_load((tmp_path / "run.yaml").read_text(encoding="utf-8"))
    assert metadata["rng"] == "numpy.random.PCG64"
    assert metadata["config"]["means"] == [0.3, 0.7]
    assert metadata["config"]["m"] == 10


def test_single_replication_single_step(tmp_path):
    """Test that reps = 1 and horizon = 1 give one row with zero stderr."""
    run_experiment(small_config(reps=1, horizon=1, stride=None, out=str(tmp_path)))
    curve = read_curve(tmp_path / "curve.csv")
    assert len(curve) == 1
    assert curve["step"].iloc[0] == 1
    assert curve["stderr"].iloc[0] == 0.0


def test_reruns_are_byte_identical(tmp_path):
    """Test that the same config writes the same bytes."""
    config = small_config(out=str(tmp_path))
    names = ("curve.csv", "summary.csv", "run.yaml")
    run_experiment(config)
    first = {name: (tmp_path / name).read_bytes() for name in names}
    run_experiment(config)
    for name in names:
        assert (tmp_path / name).read_bytes() == first[name]


def test_worker_pool_matches_serial_run():
    """Test that spreading replications over processes changes nothing."""
    serial = run_experiment(small_config(protocol="elimination", params={"M": 3, "N": 10}))
    pooled = run_experiment(
        small_config(protocol="elimination", params={"M": 3, "N": 10}, workers=2)
    )
    assert np.array_equal(serial.curve.mean, pooled.curve.mean)
    assert serial.summary == pooled.summary
    assert [r.index for r in pooled.replications] == [0, 1, 2, 3]


def test_commitment_diagnostics():
    """Test the commitment counts recorded next to the summary."""
    base = dict(means=None, arms=5, horizon=50, reps=3, seed=4, stride=None)
    thompson = run_experiment(small_config(protocol="thompson", params={}, **base))
    ete = run_experiment(small_config(protocol="ete", params={"N": 2}, **base))
    assert thompson.extras["committed_replications"] == 0
    assert thompson.extras["mean_commitment_step"] is None
    assert ete.extras["committed_replications"] == 3
    assert ete.extras["mean_commitment_step"] == pytest.approx(10.0)
    assert ete.extras["mean_policy_gap"] == pytest.approx(ete.mean_final_gap)
    assert thompson.mean_final_gap == pytest.approx(thompson.extras["mean_exploit_gap"])
    assert thompson.extras["settled_replications"] == 0


def test_uncommitted_agents_settle_past_the_horizon():
    """Test that the final gap is read from the arm a still-searching agent commits to."""
    means = (0.2, 0.45, 0.7, 0.3, 0.6)
    base = dict(
        protocol="elimination",
        means=means,
        arms=5,
        horizon=4,
        reps=6,
        seed=2,
        stride=None,
        params={"M": 3, "N": 10},
    )
    at_horizon = run_experiment(small_config(settle=0, **base))
    settled = run_experiment(small_config(**base))

    assert at_horizon.extras["committed_replications"] == 0
    assert at_horizon.extras["settled_replications"] == 0
    assert at_horizon.mean_final_gap == pytest.approx(at_horizon.extras["mean_exploit_gap"])

    assert settled.extras["committed_replications"] == 0
    assert settled.extras["settled_replications"] == 6
    assert settled.extras["mean_settle_steps"] > 0
    assert np.array_equal(settled.curve.mean, at_horizon.curve.mean)
    assert settled.extras["mean_exploit_gap"] == pytest.approx(
        at_horizon.extras["mean_exploit_gap"]
    )
    gaps = [0.7 - mean for mean in means]
    for replication in settled.replications:
        assert replication.settle_steps > 0
        assert min(abs(replication.final_gap - gap) for gap in gaps) < 1e-12


def test_settle_limit_leaves_agent_uncommitted(caplog):
    """Test that a limit too short to finish the tournament is reported."""
    result = run_experiment(
        small_config(
            protocol="elimination",
            means=(0.2, 0.45, 0.7, 0.3, 0.6),
            arms=5,
            horizon=4,
            reps=2,
            stride=None,
            settle=1,
            params={"M": 3, "N": 10},
        )
    )
    assert result.extras["settled_replications"] == 0
    assert "did not commit within 1 steps" in caplog.text


def test_epsilon_greedy_gap_is_its_policy_gap():
    """Test that an agent exploring forever is charged for its exploration."""
    result = run_experiment(
        small_config(
            protocol="egreedy",
            params={},
            means=(0.2, 0.45, 0.7, 0.3, 0.6),
            arms=5,
            horizon=1_000,
            reps=3,
            stride=None,
        )
    )
    assert result.extras["settled_replications"] == 0
    assert result.mean_final_gap == pytest.approx(result.extras["mean_policy_gap"])
    assert result.mean_final_gap > result.extras["mean_exploit_gap"]

def test_figure_settings():
    """Test the settings behind each figure."""
    assert [s.label for s in figure_settings("m")] == ["m50", "m100", "m200", "m500"]
    assert figure_settings("thresholds")[1].label == "m1_20_m2_3"
    assert [s.label for s in figure_settings("elimination")][:2] == ["N1000_M10", "N1000_M20"]
    assert [s.protocol for s in figure_settings("compare")] == [
        "elimination",
        "aspiration2",
        "egreedy",
        "thompson",
    ]
    with pytest.raises(ConfigError):
        figure_settings("ucb")


def test_figure_sweep_writes_prefixed_files(tmp_path):
    """Test a tiny elimination sweep."""
    results = figure_sweep("elimination", out=tmp_path, reps=2, horizon=100, arms=4, seed=3)
    assert list(results) == ["N1000_M10", "N1000_M20", "N1000_M100", "N100_M10", "N100_M20"]
    summary = pd.read_csv(tmp_path / "summary.csv")
    assert len(summary) == 5
    assert set(summary["protocol"]) == {"elimination"}
    for label in results:
        assert (tmp_path / f"{label}_curve.csv").exists()
        assert (tmp_path / f"{label}_run.yaml").exists()


def test_plot_curves(tmp_path):
    """Test that curve files are drawn into an SVG."""
    run_experiment(small_config(out=str(tmp_path)))
    out = plot_curves([tmp_path / "curve.csv"], tmp_path / "figure.svg", title="regret")
    text = out.read_text(encoding="utf-8")
    assert "<svg" in text
