"""
Test cases for Bernoulli bandits and arm permutations.
"""

import math
import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

import numpy as np
import pytest

from src.bandit.bernoulli import (
    BernoulliBandit,
    genericity_violation,
    is_generic,
    permute,
    sample_bandit,
)
from src.bandit.permutation import Permutation, all_permutations, permutation_sample
from src.common.exceptions import ParameterError, StructureError
from src.common.rng import make_rng


def test_bandit_validation():
    """Test that empty and out-of-range means are rejected."""
    with pytest.raises(StructureError):
        BernoulliBandit([])
    with pytest.raises(StructureError):
        BernoulliBandit([0.5, 1.2])
    with pytest.raises(StructureError):
        BernoulliBandit([-0.1])
    with pytest.raises(StructureError):
        BernoulliBandit([0.5]).pull(2, make_rng(0))


def test_bandit_properties():
    """Test means, best arm and gaps."""
    bandit = BernoulliBandit([0.2, 0.9, 0.5])
    assert bandit.num_arms == 3
    assert bandit.mean(2) == pytest.approx(0.9)
    assert bandit.best_mean() == pytest.approx(0.9)
    assert bandit.best_arm() == 2
    assert bandit.gaps() == pytest.approx([0.7, 0.0, 0.4])
    assert bandit == BernoulliBandit((0.2, 0.9, 0.5))


def test_pull_frequency():
    """Test single pulls against the arm mean."""
    bandit = BernoulliBandit([0.25, 0.75])
    rng = make_rng(2)
    rewards = [bandit.pull(2, rng) for _ in range(20_000)]
    assert set(rewards) <= {0, 1}
    assert np.mean(rewards) == pytest.approx(0.75, abs=0.015)


def test_pull_many():
    """Test vectorized pulls and the certain arms."""
    bandit = BernoulliBandit([0.0, 1.0, 0.4])
    rng = make_rng(3)
    assert bandit.pull_many(1, 100, rng).sum() == 0
    assert bandit.pull_many(2, 100, rng).sum() == 100
    rewards = bandit.pull_many(3, 50_000, rng)
    assert rewards.dtype == np.int8
    assert rewards.mean() == pytest.approx(0.4, abs=0.01)


def test_sample_bandit_bounds():
    """Test that sampled means lie below the sampled alpha."""
    rng = make_rng(7)
    for _ in range(200):
        bandit = sample_bandit(10, rng)
        assert bandit.num_arms == 10
        assert np.all(bandit.mean_array >= 0.0)
        assert bandit.best_mean() < 1.0
    fixed = sample_bandit(1_000, make_rng(8), alpha=0.2)
    assert fixed.best_mean() < 0.2
    with pytest.raises(ParameterError):
        sample_bandit(0, rng)
    with pytest.raises(ParameterError):
        sample_bandit(3, rng, alpha=1.5)


def test_sample_bandit_is_seeded():
    """Test that the same seed gives the same instance."""
    assert sample_bandit(5, make_rng(1)) == sample_bandit(5, make_rng(1))


def test_genericity():
    """Test each genericity clause."""
    assert is_generic(BernoulliBandit([0.3, 0.7]))
    assert is_generic(BernoulliBandit([0.0, 0.3, 0.7]))
    assert "below 1" in genericity_violation(BernoulliBandit([0.3, 1.0]))
    assert "distinct" in genericity_violation(BernoulliBandit([0.3, 0.3, 0.5]))
    assert "positive" in genericity_violation(BernoulliBandit([0.0, 0.5]))


def test_permute():
    """Test that the permuted bandit satisfies mu_k = mu'_rho(k)."""
    bandit = BernoulliBandit([0.1, 0.2, 0.3])
    rho = Permutation((2, 3, 1))
    permuted = permute(bandit, rho)
    assert permuted.means == pytest.approx((0.3, 0.1, 0.2))
    for k in range(1, 4):
        assert bandit.mean(k) == permuted.mean(rho(k))
    assert permute(permuted, rho.inverse()) == bandit
    with pytest.raises(StructureError):
        permute(bandit, Permutation((2, 1)))


def test_permutation_basics():
    """Test validation, identity, swap and inverse."""
    with pytest.raises(StructureError):
        Permutation((1, 1, 2))
    assert Permutation.identity(4).is_identity()
    swap = Permutation.swap(3, 1, 3)
    assert swap.mapping == (3, 2, 1)
    assert swap.inverse() == swap
    rho = Permutation((3, 1, 2))
    assert rho.inverse().mapping == (2, 3, 1)


def test_permutation_sample_small():
    """Test that small K gives every permutation, identity first."""
    chosen = permutation_sample(4, 120, make_rng(0))
    assert len(chosen) == math.factorial(4)
    assert chosen[0].is_identity()
    assert len(set(p.mapping for p in chosen)) == 24
    assert len(list(all_permutations(5))) == 120


def test_permutation_sample_capped():
    """Test that large K gives the capped number of distinct permutations."""
    chosen = permutation_sample(50, 120, make_rng(1))
    assert len(chosen) == 120
    assert chosen[0].is_identity()
    assert len(set(p.mapping for p in chosen)) == 120
