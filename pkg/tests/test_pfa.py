"""
Test cases for PFA construction, lookup and structural equality.
"""

import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

import pytest

from src.automata.pfa import Observation, RulePfa, TablePfa, materialize, observations
from src.common.exceptions import StructureError
from src.protocols.compile import compile_aspiration, constant_pfa


def two_state_pfa() -> TablePfa:
    """Build a PFA that wanders until arm 2 pays, then stays on arm 2."""
    o = Observation
    return TablePfa(
        ["explore", "stay"],
        "explore",
        [1, 2],
        observations(2),
        {0: ((1, 0.5), (2, 0.5)), 1: ((2, 1.0),)},
        {
            (0, o(1, 0)): ((0, 1.0),),
            (0, o(1, 1)): ((0, 1.0),),
            (0, o(2, 0)): ((0, 1.0),),
            (0, o(2, 1)): ((0, 0.5), (1, 0.5)),
            (1, o(2, 0)): ((1, 1.0),),
            (1, o(2, 1)): ((1, 1.0),),
        },
    )


def test_observation_symbols():
    """Test observation validation and its text form."""
    assert str(Observation(2, 1)) == "2:1"
    assert Observation.parse("3:0") == Observation(3, 0)
    assert len(observations(4)) == 8
    with pytest.raises(StructureError):
        Observation(0, 1)
    with pytest.raises(StructureError):
        Observation(1, 2)


def test_lookup():
    """Test label and id lookup and the alphabets."""
    pfa = two_state_pfa()
    assert pfa.num_states == 2
    assert pfa.start_label == "explore"
    assert pfa.state_id("stay") == 1
    assert pfa.label(1) == "stay"
    assert pfa.outputs == (1, 2)
    assert pfa.action_distribution(0) == ((1, 0.5), (2, 0.5))
    assert pfa.transition_distribution(0, Observation(2, 1)) == ((0, 0.5), (1, 0.5))


def test_structural_errors():
    """Test unknown states and undefined transitions."""
    pfa = two_state_pfa()
    with pytest.raises(StructureError):
        pfa.action_distribution(5)
    with pytest.raises(StructureError):
        pfa.transition_distribution(1, Observation(1, 0))
    with pytest.raises(StructureError):
        pfa.state_id("missing")


def test_absorbing():
    """Test that only the state playing one arm with self-loops is absorbing."""
    pfa = two_state_pfa()
    assert pfa.is_absorbing(1)
    assert not pfa.is_absorbing(0)


def test_invalid_construction():
    """Test empty, duplicate, malformed and unknown-start state sets."""
    alphabet = observations(1)
    with pytest.raises(StructureError):
        TablePfa([], "a", [1], alphabet, {}, {})
    with pytest.raises(StructureError):
        TablePfa(["a", "a"], "a", [1], alphabet, {0: ((1, 1.0),), 1: ((1, 1.0),)}, {})
    with pytest.raises(StructureError):
        TablePfa([(1.5,)], (1.5,), [1], alphabet, {0: ((1, 1.0),)}, {})
    with pytest.raises(StructureError):
        TablePfa(["a"], "b", [1], alphabet, {0: ((1, 1.0),)}, {})


def test_invalid_tables():
    """Test a bad action sum and an action on an unknown arm."""
    alphabet = observations(2)
    with pytest.raises(StructureError):
        TablePfa(["a"], "a", [1, 2], alphabet, {0: ((1, 0.5), (2, 0.4))}, {})
    with pytest.raises(StructureError):
        TablePfa(["a"], "a", [1, 2], alphabet, {0: ((3, 1.0),)}, {})
    with pytest.raises(StructureError):
        TablePfa(["a"], "a", [1, 2], alphabet, {}, {})


def test_rule_pfa_equals_its_materialization():
    """Test that expanding a rule-generated PFA keeps it structurally equal."""
    pfa = compile_aspiration(2, ranks=3, accept=2, reject=2)
    table = materialize(pfa)
    assert isinstance(table, TablePfa)
    assert table == pfa
    assert table != compile_aspiration(2, ranks=3, accept=2, reject=1)


def test_rule_pfa_transitions_only_for_played_arm():
    """Test that a rule-generated state only defines its own arm's observations."""
    pfa = compile_aspiration(3, ranks=4, accept=2, reject=2)
    state = pfa.state_id((4, 2, 0))
    assert pfa.defined_inputs(state) == (Observation(2, 0), Observation(2, 1))
    with pytest.raises(StructureError):
        pfa.transition_distribution(state, Observation(1, 1))


def test_rule_pfa_rejects_unknown_successor():
    """Test that a rule pointing outside the state set is a structural error."""
    pfa = RulePfa(
        [(1,)],
        (1,),
        [1],
        observations(1),
        lambda label: ((1, 1.0),),
        lambda label, obs: (((2,), 1.0),),
    )
    with pytest.raises(StructureError):
        pfa.transition_distribution(0, Observation(1, 0))


def test_constant_pfa():
    """Test the one-state automaton."""
    pfa = constant_pfa(3, arm=2)
    assert pfa.num_states == 1
    assert pfa.action_distribution(0) == ((2, 1.0),)
    assert pfa.is_absorbing(0)
