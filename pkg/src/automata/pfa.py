"""
Probabilistic finite automata with output.

States are opaque integers ``0..n-1``; each has a structured label (a string
or a tuple of integers such as ``(r, k, c)``) kept in a side table. Two
concrete automata share one interface: ``TablePfa`` holds explicit tables,
``RulePfa`` generates its tables on demand from rule functions.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Hashable, Iterable, Optional, Sequence, Tuple

from ..common.exceptions import StructureError
from .distribution import Distribution, DistributionError, canonical, support

logger = logging.getLogger(__name__)

Label = Hashable
ActionRule = Callable[[Label], Iterable[Tuple[int, float]]]
TransitionRule = Callable[[Label, "Observation"], Optional[Iterable[Tuple[Label, float]]]]


@dataclass(frozen=True, order=True)
class Observation:
    """
    The outcome of one pull: arm ``arm`` paid ``reward``.

    Attributes:
        arm (int): The arm played, 1..K.
        reward (int): The reward, 0 or 1.
    """

    arm: int
    reward: int

    def __post_init__(self) -> None:
        if self.arm < 1:
            raise StructureError(f"Observation arm must be at least 1, got {self.arm}.")
        if self.reward not in (0, 1):
            raise StructureError(f"Observation reward must be 0 or 1, got {self.reward}.")

    def __str__(self) -> str:
        return f"{self.arm}:{self.reward}"

    @classmethod
    def parse(cls, text: str) -> "Observation":
        arm, reward = text.split(":")
        return cls(int(arm), int(reward))


def observations(num_arms: int) -> Tuple[Observation, ...]:
    """Get the input alphabet {(k, h) : 1 <= k <= K, h in {0, 1}}."""
    return tuple(
        Observation(arm, reward)
        for arm in range(1, num_arms + 1)
        for reward in (0, 1)
    )


def _check_label(label: Label) -> None:
    if isinstance(label, str):
        return
    if isinstance(label, tuple) and label and all(
        isinstance(part, int) and not isinstance(part, bool) for part in label
    ):
        return
    raise StructureError(
        f"State label {label!r} must be a string or a non-empty tuple of integers."
    )


class Pfa:
    """
    A probabilistic finite automaton with output (Q, q0, Sigma, O, gamma, delta).

    Subclasses supply ``_action`` and ``_transition``. A Pfa is immutable once
    built and may be shared by concurrent executions.
    """

    def __init__(
        self,
        labels: Sequence[Label],
        start: Label,
        outputs: Iterable[int],
        inputs: Iterable[Observation],
    ) -> None:
        """
        Initialize the state space and alphabets.

        Args:
            labels (Sequence[Label]): One label per state; state ``i`` has ``labels[i]``.
            start (Label): The label of the start state.
            outputs (Iterable[int]): The output alphabet (arms).
            inputs (Iterable[Observation]): The input alphabet (observations).

        Raises:
            StructureError: If the state set is empty, a label repeats or is
                malformed, or the start label is unknown.
        """
        self._labels = tuple(labels)
        if not self._labels:
            logger.error("Attempted to build a PFA with an empty state set.")
            raise StructureError("A PFA needs at least one state.")
        self._index: Dict[Label, int] = {}
        for i, label in enumerate(self._labels):
            _check_label(label)
            if label in self._index:
                raise StructureError(f"State label {label!r} appears twice.")
            self._index[label] = i
        if start not in self._index:
            logger.error(f"Start state {start!r} is not a state of the PFA.")
            raise StructureError(f"Start state {start!r} is not in the state set.")
        self._start = self._index[start]
        self._outputs = tuple(sorted(set(int(o) for o in outputs)))
        self._inputs = tuple(sorted(set(inputs)))
        self._absorbing: Dict[int, bool] = {}

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(states={self.num_states}, "
            f"start={self.start_label!r}, outputs={len(self._outputs)})"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pfa):
            return NotImplemented
        return self.canonical_form() == other.canonical_form()

    __hash__ = None  # type: ignore[assignment]

    @property
    def num_states(self) -> int:
        return len(self._labels)

    @property
    def states(self) -> range:
        return range(len(self._labels))

    @property
    def start(self) -> int:
        return self._start

    @property
    def start_label(self) -> Label:
        return self._labels[self._start]

    @property
    def outputs(self) -> Tuple[int, ...]:
        return self._outputs

    @property
    def inputs(self) -> Tuple[Observation, ...]:
        return self._inputs

    @property
    def labels(self) -> Tuple[Label, ...]:
        return self._labels

    def label(self, state: int) -> Label:
        self._check_state(state)
        return self._labels[state]

    def state_id(self, label: Label) -> int:
        """
        Look up the state carrying ``label``.

        Raises:
            StructureError: If no state has that label.
        """
        try:
            return self._index[label]
        except KeyError:
            raise StructureError(f"Unknown state label {label!r}.") from None

    def action_distribution(self, state: int) -> Distribution:
        """
        Get gamma(state), sorted by output symbol.

        Raises:
            StructureError: If ``state`` is unknown.
        """
        self._check_state(state)
        return self._action(state)

    def transition_distribution(self, state: int, obs: Observation) -> Distribution:
        """
        Get delta(state, obs), sorted by successor state id.

        Raises:
            StructureError: If ``state`` is unknown or the transition is undefined.
        """
        self._check_state(state)
        distribution = self._transition(state, obs)
        if distribution is None:
            raise StructureError(
                f"No transition from state {self._labels[state]!r} on observation {obs}."
            )
        return distribution

    def defined_inputs(self, state: int) -> Tuple[Observation, ...]:
        """Get the observations with a defined transition out of ``state``."""
        self._check_state(state)
        return self._defined_inputs(state)

    def is_absorbing(self, state: int) -> bool:
        """
        Check whether ``state`` plays one arm and every defined transition stays put.
        """
        cached = self._absorbing.get(state)
        if cached is None:
            action = self.action_distribution(state)
            cached = len(action) == 1 and all(
                self.transition_distribution(state, obs) == ((state, 1.0),)
                for obs in self.defined_inputs(state)
            )
            # An absorbing state must cover both rewards of its arm.
            arm = action[0][0]
            covered = {o.reward for o in self.defined_inputs(state) if o.arm == arm}
            cached = cached and covered == {0, 1}
            self._absorbing[state] = cached
        return cached

    def canonical_form(self) -> tuple:
        """
        Materialize the automaton with labels in place of state ids.

        Two automata are structurally equal exactly when their canonical forms are.
        """
        action = tuple(self._action(s) for s in self.states)
        delta = tuple(
            tuple(
                (
                    obs,
                    tuple(
                        (self._labels[t], p)
                        for t, p in self._transition(s, obs)  # type: ignore[union-attr]
                    ),
                )
                for obs in self._defined_inputs(s)
            )
            for s in self.states
        )
        return (
            self._outputs,
            self._inputs,
            self._labels,
            self._start,
            action,
            delta,
        )

    def _check_state(self, state: int) -> None:
        if not 0 <= state < len(self._labels):
            logger.error(f"State {state} is not a state of {self!r}.")
            raise StructureError(f"Unknown state {state}.")

    def _action(self, state: int) -> Distribution:
        raise NotImplementedError("Subclasses must implement this method.")

    def _transition(self, state: int, obs: Observation) -> Optional[Distribution]:
        raise NotImplementedError("Subclasses must implement this method.")

    def _defined_inputs(self, state: int) -> Tuple[Observation, ...]:
        raise NotImplementedError("Subclasses must implement this method.")


class TablePfa(Pfa):
    """
    A PFA with explicit action and transition tables keyed by state id.
    """

    def __init__(
        self,
        labels: Sequence[Label],
        start: Label,
        outputs: Iterable[int],
        inputs: Iterable[Observation],
        action: Dict[int, Distribution],
        delta: Dict[Tuple[int, Observation], Distribution],
    ) -> None:
        """
        Initialize the PFA from materialized tables.

        Args:
            labels (Sequence[Label]): One label per state.
            start (Label): The start label.
            outputs (Iterable[int]): The output alphabet.
            inputs (Iterable[Observation]): The input alphabet.
            action (Dict[int, Distribution]): gamma, one distribution per state.
            delta (Dict[Tuple[int, Observation], Distribution]): The defined transitions.

        Raises:
            StructureError: If a state lacks an action distribution or a table
                mentions an unknown state or symbol.
        """
        super().__init__(labels, start, outputs, inputs)
        outputs_set = set(self.outputs)
        inputs_set = set(self.inputs)
        self._action_table: Dict[int, Distribution] = {}
        for state in self.states:
            if state not in action:
                raise StructureError(f"State {self.labels[state]!r} has no action.")
            try:
                distribution = canonical(action[state])
            except DistributionError as exc:
                raise StructureError(
                    f"Action of state {self.labels[state]!r}: {exc}"
                ) from None
            if not set(support(distribution)) <= outputs_set:
                raise StructureError(
                    f"Action of state {self.labels[state]!r} plays an unknown arm."
                )
            self._action_table[state] = distribution

        self._delta_table: Dict[Tuple[int, Observation], Distribution] = {}
        self._inputs_by_state: Dict[int, Tuple[Observation, ...]] = {}
        for (state, obs), successors in delta.items():
            self._check_state(state)
            if obs not in inputs_set:
                raise StructureError(f"Observation {obs} is not in the input alphabet.")
            try:
                distribution = canonical(successors)
            except DistributionError as exc:
                raise StructureError(
                    f"Transition of state {self.labels[state]!r} on {obs}: {exc}"
                ) from None
            for successor, _ in distribution:
                self._check_state(successor)
            self._delta_table[(state, obs)] = distribution
        for state, obs in sorted(self._delta_table):
            self._inputs_by_state.setdefault(state, ())
            self._inputs_by_state[state] += (obs,)

    def _action(self, state: int) -> Distribution:
        return self._action_table[state]

    def _transition(self, state: int, obs: Observation) -> Optional[Distribution]:
        return self._delta_table.get((state, obs))

    def _defined_inputs(self, state: int) -> Tuple[Observation, ...]:
        return self._inputs_by_state.get(state, ())


class RulePfa(Pfa):
    """
    A PFA whose tables are generated by rules over labels.

    Transitions are defined for the observations an execution can produce:
    the arms in the state's action support, each with reward 0 and 1. The
    rule returns ``None`` for anything else.
    """

    def __init__(
        self,
        labels: Sequence[Label],
        start: Label,
        outputs: Iterable[int],
        inputs: Iterable[Observation],
        action_rule: ActionRule,
        transition_rule: TransitionRule,
        cache_size: int = 1 << 16,
    ) -> None:
        """
        Initialize the PFA.

        Args:
            labels (Sequence[Label]): One label per state.
            start (Label): The start label.
            outputs (Iterable[int]): The output alphabet.
            inputs (Iterable[Observation]): The input alphabet.
            action_rule (ActionRule): label -> pairs (arm, probability).
            transition_rule (TransitionRule): (label, obs) -> pairs (label, probability).
            cache_size (int): Number of generated transitions kept in memory.
        """
        super().__init__(labels, start, outputs, inputs)
        self._action_rule = action_rule
        self._transition_rule = transition_rule
        self._cached_action = lru_cache(maxsize=cache_size)(self._generate_action)
        self._cached_transition = lru_cache(maxsize=cache_size)(
            self._generate_transition
        )

    def _generate_action(self, state: int) -> Distribution:
        try:
            return canonical(self._action_rule(self.labels[state]))
        except DistributionError as exc:
            raise StructureError(f"Action of state {self.labels[state]!r}: {exc}") from None

    def _generate_transition(
        self, state: int, obs: Observation
    ) -> Optional[Distribution]:
        if obs not in self._defined_inputs(state):
            return None
        pairs = self._transition_rule(self.labels[state], obs)
        if pairs is None:
            return None
        try:
            return canonical((self.state_id(label), p) for label, p in pairs)
        except DistributionError as exc:
            raise StructureError(
                f"Transition of state {self.labels[state]!r} on {obs}: {exc}"
            ) from None

    def _action(self, state: int) -> Distribution:
        return self._cached_action(state)

    def _transition(self, state: int, obs: Observation) -> Optional[Distribution]:
        return self._cached_transition(state, obs)

    def _defined_inputs(self, state: int) -> Tuple[Observation, ...]:
        return tuple(
            Observation(arm, reward)
            for arm in support(self._action(state))
            for reward in (0, 1)
        )


def materialize(pfa: Pfa) -> TablePfa:
    """
    Expand any PFA into explicit tables.

    Args:
        pfa (Pfa): The automaton to expand.

    Returns:
        TablePfa: An automaton structurally equal to ``pfa``.
    """
    if isinstance(pfa, TablePfa):
        return pfa
    action = {s: pfa.action_distribution(s) for s in pfa.states}
    delta = {
        (s, obs): pfa.transition_distribution(s, obs)
        for s in pfa.states
        for obs in pfa.defined_inputs(s)
    }
    return TablePfa(pfa.labels, pfa.start_label, pfa.outputs, pfa.inputs, action, delta)
