"""
Finite-state protocols written out as PFAs.

Each compiler enumerates the protocol's labels and hands rule functions to a
``RulePfa``; executions of the result are distributed exactly like the
corresponding agent.
"""

import itertools
import logging
import math
from typing import Iterator, List, Tuple

import numpy as np

from ..automata.pfa import Observation, Pfa, RulePfa, TablePfa, observations
from ..common.constants import (
    DEFAULT_ACCEPT_THRESHOLD,
    DEFAULT_COUNTER_THRESHOLD,
    DEFAULT_EXPLORATION,
    DEFAULT_RANKS,
    DEFAULT_REJECT_THRESHOLD,
    DEFAULT_STOP_PARAMETER,
    MAX_COMPILED_STATES,
)
from ..common.exceptions import ParameterError
from .agent import require
from .aspiration import virtual_probability
from .elimination import Turn

logger = logging.getLogger(__name__)


def aspiration_state_count(num_arms: int, ranks: int, accept: int, reject: int) -> int:
    """Get K * m * (M1 + M2), the size of the aspiration state space."""
    return num_arms * ranks * (accept + reject)


def elimination_state_count(num_arms: int, threshold: int) -> int:
    """Get C(K, 2) * 2 * (2M + 1), the size of the tournament state space."""
    return math.comb(num_arms, 2) * 2 * (2 * threshold + 1)


def explore_then_exploit_state_count(num_arms: int, exploration: int) -> int:
    """
    Count exploration states (step, success counts) plus one commitment per arm.

    At step t = qK + j the first j arms have q + 1 plays and the others q.
    """
    exploring = sum(
        (q + 2) ** j * (q + 1) ** (num_arms - j)
        for q in range(exploration)
        for j in range(num_arms)
    )
    return exploring + num_arms


def constant_pfa(num_arms: int, arm: int = 1) -> TablePfa:
    """
    Build the one-state automaton that always plays ``arm``.

    Args:
        num_arms (int): The number of arms K.
        arm (int): The arm to play.

    Returns:
        TablePfa: The automaton.
    """
    require(num_arms >= 1, f"Number of arms must be at least 1, got {num_arms}.")
    require(1 <= arm <= num_arms, f"Arm {arm} is out of range 1..{num_arms}.")
    label = (arm,)
    return TablePfa(
        [label],
        label,
        range(1, num_arms + 1),
        observations(num_arms),
        {0: ((arm, 1.0),)},
        {(0, Observation(arm, reward)): ((0, 1.0),) for reward in (0, 1)},
    )


def compile_stay_on_success(num_arms: int) -> RulePfa:
    """
    Build the automaton that keeps an arm while it pays 1 and moves on after a 0.

    Optimal whenever some arm pays 1 with certainty, which is why bandits with
    mu* = 1 are excluded from genericity.
    """
    require(num_arms >= 1, f"Number of arms must be at least 1, got {num_arms}.")

    def action(label):
        return ((label[0], 1.0),)

    def transition(label, obs):
        if obs.reward == 1:
            return ((label, 1.0),)
        return ((((label[0] % num_arms) + 1,), 1.0),)

    return RulePfa(
        [(k,) for k in range(1, num_arms + 1)],
        (1,),
        range(1, num_arms + 1),
        observations(num_arms),
        action,
        transition,
    )


def _aspiration_labels(
    num_arms: int, ranks: int, accept: int, reject: int
) -> Iterator[Tuple[int, int, int]]:
    for r in range(ranks, 0, -1):
        for k in range(1, num_arms + 1):
            for c in range(-reject + 1, accept + 1):
                yield (r, k, c)


def compile_aspiration(
    num_arms: int,
    ranks: int = DEFAULT_RANKS,
    accept: int = DEFAULT_ACCEPT_THRESHOLD,
    reject: int = DEFAULT_REJECT_THRESHOLD,
) -> RulePfa:
    """
    Write the aspiration-level protocol as a PFA over states (r, k, c).

    gamma plays arm k. At c = M1 the state is absorbing. Otherwise a success
    raises c with probability 1 - (r - 0.5)/m; a failure lowers it with
    probability (r - 0.5)/m, and a drop to -M2 moves to (r, k + 1, 0), or to
    (max(r - 1, 1), 1, 0) from the last arm.

    Args:
        num_arms (int): The number of arms K.
        ranks (int): The number of ranks m.
        accept (int): The accept threshold M1.
        reject (int): The reject magnitude M2.

    Returns:
        RulePfa: The automaton, with K * m * (M1 + M2) states.
    """
    require(num_arms >= 1, f"Number of arms must be at least 1, got {num_arms}.")
    require(ranks >= 1, f"Number of ranks m must be at least 1, got {ranks}.")
    require(accept >= 1, f"Accept threshold M1 must be at least 1, got {accept}.")
    require(reject >= 1, f"Reject threshold M2 must be at least 1, got {reject}.")

    def action(label):
        return ((label[1], 1.0),)

    def transition(label, obs: Observation):
        r, k, c = label
        if obs.arm != k:
            return None
        if c == accept:
            return ((label, 1.0),)
        p = virtual_probability(r, ranks)
        if obs.reward == 1:
            return (((r, k, c + 1), 1.0 - p), (label, p))
        if c - 1 > -reject:
            lowered = (r, k, c - 1)
        elif k < num_arms:
            lowered = (r, k + 1, 0)
        else:
            lowered = (max(r - 1, 1), 1, 0)
        return ((lowered, p), (label, 1.0 - p))

    pfa = RulePfa(
        list(_aspiration_labels(num_arms, ranks, accept, reject)),
        (ranks, 1, 0),
        range(1, num_arms + 1),
        observations(num_arms),
        action,
        transition,
    )
    logger.info(f"Compiled aspiration protocol K={num_arms}, m={ranks}, "
                f"M1={accept}, M2={reject}: {pfa.num_states} states")
    return pfa


def _elimination_labels(num_arms: int, threshold: int) -> Iterator[Tuple[int, int, int, int]]:
    for i in range(1, num_arms + 1):
        for j in range(i + 1, num_arms + 1):
            for turn in Turn:
                for c in range(-threshold, threshold + 1):
                    yield (i, j, int(turn), c)


def compile_elimination(
    num_arms: int,
    threshold: int = DEFAULT_COUNTER_THRESHOLD,
    stop_parameter: int = DEFAULT_STOP_PARAMETER,
) -> RulePfa:
    """
    Write the elimination tournament as a PFA over states (i, j, turn, c).

    States with |c| < M are live comparisons of champion i with challenger j.
    A finished comparison is held in a settlement state with c = +M (champion
    survives) or c = -M (challenger survives); its turn field is the
    survivor's side when the counter settled the comparison and the
    eliminated side when the 1/N stop did. A settlement state plays the
    survivor as the champion's first move against arm j + 1, or forever when
    j = K.

    Args:
        num_arms (int): The number of arms K, at least 2.
        threshold (int): The counter threshold M.
        stop_parameter (int): The stop parameter N.

    Returns:
        RulePfa: The automaton, with C(K, 2) * 2 * (2M + 1) states.
    """
    require(num_arms >= 2, f"The tournament needs at least 2 arms, got {num_arms}.")
    require(threshold >= 1, f"Counter threshold M must be at least 1, got {threshold}.")
    require(stop_parameter >= 1, f"Stop parameter N must be at least 1, got {stop_parameter}.")
    champion, challenger = int(Turn.CHAMPION), int(Turn.CHALLENGER)
    stop = 1.0 / stop_parameter

    def survivor(label) -> int:
        i, j, _, c = label
        return i if c > 0 else j

    def action(label):
        i, j, turn, c = label
        if abs(c) == threshold:
            return ((survivor(label), 1.0),)
        return ((i if turn == champion else j, 1.0),)

    def champion_move(i: int, j: int, c: int, reward: int):
        if c + reward >= threshold:
            return (((i, j, champion, threshold), 1.0),)
        return (((i, j, challenger, c + reward), 1.0),)

    def transition(label, obs: Observation):
        i, j, turn, c = label
        if abs(c) == threshold:
            if j == num_arms:
                return ((label, 1.0),)
            return champion_move(survivor(label), j + 1, 0, obs.reward)
        if turn == champion:
            return champion_move(i, j, c, obs.reward)

        c -= obs.reward
        if c <= -threshold:
            return (((i, j, challenger, -threshold), 1.0),)
        if c >= 0:
            stopped = (i, j, challenger, threshold)
        else:
            stopped = (i, j, champion, -threshold)
        return ((stopped, stop), ((i, j, champion, c), 1.0 - stop))

    pfa = RulePfa(
        list(_elimination_labels(num_arms, threshold)),
        (1, 2, champion, 0),
        range(1, num_arms + 1),
        observations(num_arms),
        action,
        transition,
    )
    logger.info(f"Compiled elimination tournament K={num_arms}, M={threshold}, "
                f"N={stop_parameter}: {pfa.num_states} states")
    return pfa


def _exploration_labels(num_arms: int, exploration: int) -> List[Tuple[int, ...]]:
    labels = []
    for t in range(num_arms * exploration):
        q, j = divmod(t, num_arms)
        plays = [q + 1] * j + [q] * (num_arms - j)
        for counts in itertools.product(*(range(n + 1) for n in plays)):
            labels.append((t,) + counts)
    return labels


def compile_explore_then_exploit(
    num_arms: int, exploration: int = DEFAULT_EXPLORATION
) -> RulePfa:
    """
    Write explore-then-exploit as a PFA.

    Exploration states are (t, s_1, ..., s_K): the step and the success count
    of every arm. After K * N observations the automaton moves to the
    absorbing state (K * N, a) of the best empirical arm a.

    Raises:
        ParameterError: If the state space exceeds the compile limit.
    """
    require(num_arms >= 1, f"Number of arms must be at least 1, got {num_arms}.")
    require(exploration >= 1, f"Exploration N must be at least 1, got {exploration}.")
    size = explore_then_exploit_state_count(num_arms, exploration)
    require(
        size <= MAX_COMPILED_STATES,
        f"Explore-then-exploit with K={num_arms}, N={exploration} needs {size} "
        f"states, above the limit of {MAX_COMPILED_STATES}.",
    )
    horizon = num_arms * exploration

    def action(label):
        if label[0] == horizon:
            return ((label[1], 1.0),)
        return ((label[0] % num_arms + 1, 1.0),)

    def transition(label, obs: Observation):
        if label[0] == horizon:
            return ((label, 1.0),)
        counts = list(label[1:])
        counts[obs.arm - 1] += obs.reward
        t = label[0] + 1
        if t == horizon:
            return (((horizon, int(np.argmax(counts)) + 1), 1.0),)
        return (((t,) + tuple(counts), 1.0),)

    labels = _exploration_labels(num_arms, exploration)
    labels += [(horizon, arm) for arm in range(1, num_arms + 1)]
    return RulePfa(
        labels,
        (0,) + (0,) * num_arms,
        range(1, num_arms + 1),
        observations(num_arms),
        action,
        transition,
    )


def compiled_protocol(protocol: str, num_arms: int, **params) -> Pfa:
    """
    Compile a finite-state protocol by name.

    Args:
        protocol (str): One of ``aspiration``, ``elimination`` or ``ete``.
        num_arms (int): The number of arms K.
        **params: Protocol parameters (``m``, ``m1``, ``m2``, ``M``, ``N``).

    Returns:
        Pfa: The compiled automaton.

    Raises:
        ParameterError: If the protocol has no finite-state form.
    """
    if protocol == "aspiration":
        return compile_aspiration(
            num_arms,
            params.get("m", DEFAULT_RANKS),
            params.get("m1", DEFAULT_ACCEPT_THRESHOLD),
            params.get("m2", DEFAULT_REJECT_THRESHOLD),
        )
    if protocol == "elimination":
        return compile_elimination(
            num_arms,
            params.get("M", DEFAULT_COUNTER_THRESHOLD),
            params.get("N", DEFAULT_STOP_PARAMETER),
        )
    if protocol == "ete":
        return compile_explore_then_exploit(
            num_arms, params.get("N", DEFAULT_EXPLORATION)
        )
    message = f"Protocol {protocol!r} has no compiled finite-state form."
    logger.error(message)
    raise ParameterError(message)
