"""
Test cases for state-count reports.
"""

import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

import pytest

from src.common.exceptions import ConfigError
from src.harness.states import INFINITE, SKIPPED, format_table, state_count_report


def test_infinite_state_protocols():
    """Test that protocols with unbounded counts get the marker."""
    for protocol in ("thompson", "egreedy"):
        report = state_count_report(protocol, arms=10)
        assert report.infinite
        assert report.formula is None
        assert report.row()["formula"] == INFINITE
        assert report.row()["bits"] == INFINITE


def test_small_aspiration_report():
    """Test that the compiled count matches the formula."""
    report = state_count_report("aspiration", arms=3, params={"m": 4, "m1": 2, "m2": 1})
    assert report.formula == 36
    assert report.compiled == 36
    assert report.bits == 6
    assert report.row() == {
        "protocol": "aspiration",
        "params": "m=4;m1=2;m2=1",
        "K": "3",
        "formula": "36",
        "compiled": "36",
        "bits": "6",
    }


def test_small_elimination_and_ete_reports():
    """Test the tournament and explore-then-exploit counts."""
    elimination = state_count_report("elimination", arms=4, params={"M": 2, "N": 5})
    assert elimination.formula == elimination.compiled == 60
    ete = state_count_report("ete", arms=3, params={"N": 2})
    assert ete.formula == ete.compiled == 48


def test_default_counts_without_compiling():
    """Test the closed forms of the default configurations."""
    aspiration = state_count_report("aspiration", compile_states=False)
    assert aspiration.formula == 115_000
    assert aspiration.bits == 17
    assert aspiration.note == SKIPPED
    elimination = state_count_report("elimination", compile_states=False)
    assert elimination.formula == 100_450
    assert elimination.bits == 17


def test_oversized_state_space_is_skipped():
    """Test that explore-then-exploit at K = 50 is not compiled."""
    report = state_count_report("ete", arms=50)
    assert report.note == SKIPPED
    assert report.compiled is None
    assert report.row()["compiled"] == SKIPPED


def test_uncompilable_protocol():
    """Test that the two-phase variant has no compiled form."""
    with pytest.raises(ConfigError):
        state_count_report("aspiration2", arms=3)
    with pytest.raises(ConfigError):
        state_count_report("ucb", arms=3)


def test_format_table():
    """Test the text table."""
    table = format_table(
        [
            state_count_report("aspiration", arms=2, params={"m": 2, "m1": 1, "m2": 1}),
            state_count_report("thompson", arms=2),
        ]
    )
    lines = table.splitlines()
    assert lines[0].split() == ["protocol", "params", "K", "formula", "compiled", "bits"]
    assert lines[1].split()[3:] == ["8", "8", "3"]
    assert INFINITE in lines[2]
