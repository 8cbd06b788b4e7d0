"""
Test cases for finite distributions and inverse-CDF sampling.
"""

import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

import numpy as np
import pytest
from scipy import stats

from src.automata.distribution import (
    DistributionError,
    canonical,
    check_distribution,
    point_mass,
    sample,
    support,
)
from src.common.rng import make_rng


def test_check_distribution_accepts_rounding():
    """Test that sums within the tolerance of 1 are accepted."""
    third = 1.0 / 3.0
    pairs = check_distribution([("a", third), ("b", third), ("c", third)])
    assert support(pairs) == ("a", "b", "c")


def test_check_distribution_rejects_short_sum():
    """Test that a distribution summing to 0.9 is rejected."""
    with pytest.raises(DistributionError):
        check_distribution([(1, 0.5), (2, 0.4)])


def test_check_distribution_rejects_bad_pairs():
    """Test the empty, negative and duplicate cases."""
    with pytest.raises(DistributionError):
        check_distribution([])
    with pytest.raises(DistributionError):
        check_distribution([(1, 1.5), (2, -0.5)])
    with pytest.raises(DistributionError):
        check_distribution([(1, 0.5), (1, 0.5)])


def test_canonical_merges_and_sorts():
    """Test that canonical drops zeros, merges repeats and sorts the support."""
    distribution = canonical([(2, 0.25), (1, 0.5), (2, 0.25), (3, 0.0)])
    assert distribution == ((1, 0.5), (2, 0.5))


def test_canonical_sorts_tuple_labels():
    """Test canonical order on tuple outcomes."""
    distribution = canonical([((2, 1), 0.5), ((1, 9), 0.5)])
    assert support(distribution) == ((1, 9), (2, 1))


def test_degenerate_sample_does_not_consume_stream():
    """Test that a point mass is returned without drawing."""
    rng = make_rng(3)
    assert sample(point_mass("x"), rng) == "x"
    assert rng.random() == make_rng(3).random()


def test_sample_walks_canonical_order():
    """Test that the first outcome is drawn exactly when u falls below its mass."""
    distribution = ((1, 0.5), (2, 0.5))
    for seed in range(20):
        u = make_rng(seed).random()
        expected = 1 if u < 0.5 else 2
        assert sample(distribution, make_rng(seed)) == expected


def test_sample_matches_probabilities():
    """Test sampled frequencies against the distribution with a chi-square test."""
    distribution = ((1, 0.2), (2, 0.5), (3, 0.3))
    rng = make_rng(11)
    draws = np.array([sample(distribution, rng) for _ in range(20_000)])
    observed = [int(np.sum(draws == k)) for k in (1, 2, 3)]
    expected = [20_000 * p for _, p in distribution]
    assert stats.chisquare(observed, expected).pvalue > 0.001


def test_even_split_frequency():
    """Test a 50/50 action over 10,000 seeded draws."""
    rng = make_rng(5)
    draws = [sample(((1, 0.5), (2, 0.5)), rng) for _ in range(10_000)]
    assert draws.count(1) / 10_000 == pytest.approx(0.5, abs=0.02)
