"""
Test cases for the explore-then-exploit, epsilon-greedy and Thompson baselines.
"""

import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

import numpy as np
import pytest

from src.bandit.bernoulli import BernoulliBandit
from src.common.exceptions import ParameterError
from src.common.rng import make_rng
from src.protocols.estimates import CountEstimates
from src.protocols.explore_exploit import EpsilonGreedyAgent, ExploreThenExploitAgent
from src.protocols.thompson import ThompsonAgent


def feed(agent, rewards, rng=None):
    """Play one step per reward and return the arms chosen."""
    rng = rng or make_rng(0)
    arms = []
    for reward in rewards:
        arm = agent.choose(rng)
        agent.observe(arm, reward, rng)
        arms.append(arm)
    return arms


def test_count_estimates():
    """Test empirical and posterior means."""
    estimates = CountEstimates(3)
    for arm, reward in ((1, 1), (1, 0), (2, 1)):
        estimates.record(arm, reward)
    assert estimates.plays.tolist() == [2, 1, 0]
    assert estimates.empirical_means() == pytest.approx([0.5, 1.0, 0.0])
    assert estimates.posterior_means() == pytest.approx([0.5, 2 / 3, 0.5])
    assert estimates.best_empirical_arm() == 2


def test_explore_then_exploit_round_robin():
    """Test K * N round-robin plays and commitment to the best arm."""
    agent = ExploreThenExploitAgent(3, exploration=2)
    arms = feed(agent, [0, 1, 0, 0, 1, 0])
    assert arms == [1, 2, 3, 1, 2, 3]
    assert agent.committed_arm == 2
    assert feed(agent, [0, 0, 0]) == [2, 2, 2]


def test_explore_then_exploit_tie_goes_to_lowest_arm():
    """Test that equal estimates commit to the lowest index."""
    agent = ExploreThenExploitAgent(3, exploration=1)
    feed(agent, [0, 0, 0])
    assert agent.committed_arm == 1
    agent = ExploreThenExploitAgent(3, exploration=1)
    feed(agent, [0, 1, 1])
    assert agent.committed_arm == 2


def test_explore_then_exploit_action_probabilities():
    """Test that the next round-robin arm carries all the mass."""
    agent = ExploreThenExploitAgent(3, exploration=2)
    feed(agent, [1])
    assert agent.action_probabilities().tolist() == [0.0, 1.0, 0.0]
    with pytest.raises(ParameterError):
        ExploreThenExploitAgent(3, exploration=0)


def test_epsilon_greedy_explores_first():
    """Test the exploration phase and the later mixed law."""
    agent = EpsilonGreedyAgent(4, exploration=2, epsilon=0.2)
    assert agent.action_probabilities().tolist() == [1.0, 0.0, 0.0, 0.0]
    arms = feed(agent, [0, 0, 1, 0, 0, 0, 1, 0])
    assert arms == [1, 2, 3, 4, 1, 2, 3, 4]
    assert not agent.exploring
    assert agent.exploit_choice() == 3
    assert agent.action_probabilities() == pytest.approx([0.05, 0.05, 0.85, 0.05])


def test_epsilon_greedy_frequencies():
    """Test that exploitation plays the best estimate about 1 - epsilon + epsilon/K of the time."""
    agent = EpsilonGreedyAgent(2, exploration=1, epsilon=0.3)
    bandit = BernoulliBandit([0.0, 1.0])
    rng = make_rng(4)
    arms = []
    for _ in range(20_002):
        arm = agent.choose(rng)
        agent.observe(arm, bandit.pull(arm, rng), rng)
        arms.append(arm)
    share = np.mean(np.array(arms[2:]) == 2)
    assert share == pytest.approx(0.85, abs=0.01)


def test_epsilon_greedy_validation():
    """Test out-of-range epsilon and exploration."""
    with pytest.raises(ParameterError):
        EpsilonGreedyAgent(3, epsilon=1.5)
    with pytest.raises(ParameterError):
        EpsilonGreedyAgent(3, exploration=-1)


def test_thompson_posterior():
    """Test the Beta(s + 1, f + 1) posterior bookkeeping."""
    agent = ThompsonAgent(2)
    assert agent.posterior(1) == (1, 1)
    agent.estimates.record(1, 1)
    agent.estimates.record(1, 1)
    agent.estimates.record(1, 0)
    assert agent.posterior(1) == (3, 2)
    assert agent.posterior(2) == (1, 1)
    assert agent.exploit_choice() == 1


def test_thompson_concentrates_on_best_arm():
    """Test that Thompson Sampling mostly plays the best arm late in a run."""
    agent = ThompsonAgent(3)
    bandit = BernoulliBandit([0.2, 0.8, 0.4])
    rng = make_rng(6)
    arms = []
    for _ in range(3_000):
        arm = agent.choose(rng)
        agent.observe(arm, bandit.pull(arm, rng), rng)
        arms.append(arm)
    assert np.mean(np.array(arms[-1_000:]) == 2) > 0.9
