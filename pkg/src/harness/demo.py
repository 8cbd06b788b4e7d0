"""
Non-optimality demonstration for a fixed PFA.

A finite automaton cannot tell which arm is best without trying, so some
relabeling of a generic bandit's arms leaves it with average regret bounded
away from zero. The demo plays the automaton against every permutation of a
bandit (or a sample of them when K! is large) and reports the worst one.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np
import pandas as pd

from ..automata.analysis import expected_regret_curve
from ..automata.engine import run
from ..automata.pfa import Pfa
from ..bandit.bernoulli import BernoulliBandit, genericity_violation, permute
from ..bandit.permutation import Permutation, permutation_sample
from ..common.constants import DEFAULT_REPLICATIONS, DEFAULT_SEED, MAX_DEMO_PERMUTATIONS
from ..common.exceptions import ConfigError, GenericityError, StructureError
from ..common.rng import make_rng, replication_rng
from ..metrics.regret import RegretTrace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NonOptimalityReport:
    """
    Average regret of one automaton over permutations of one bandit.

    Attributes:
        horizons (np.ndarray): The horizons N, increasing.
        permutations (List[Permutation]): The permutations examined, identity first.
        areg (np.ndarray): AReg, one row per permutation, one column per horizon.
        stderr (np.ndarray): Standard errors of ``areg``; zero when computed exactly.
        reps (int): Replications per permutation; 0 when computed exactly.
        plateau (float): Regret per step of the worst permutation between the
            last horizon and half of it.
    """

    horizons: np.ndarray
    permutations: List[Permutation]
    areg: np.ndarray
    stderr: np.ndarray
    reps: int
    plateau: float

    @property
    def worst_index(self) -> int:
        return int(np.argmax(self.areg[:, -1]))

    @property
    def worst_permutation(self) -> Permutation:
        return self.permutations[self.worst_index]

    @property
    def worst_curve(self) -> np.ndarray:
        return self.areg[self.worst_index]

    def frame(self) -> pd.DataFrame:
        """Get one row per (permutation, horizon)."""
        rows = []
        for i, rho in enumerate(self.permutations):
            for j, horizon in enumerate(self.horizons):
                rows.append(
                    {
                        "permutation": " ".join(str(k) for k in rho.mapping),
                        "horizon": int(horizon),
                        "areg": float(self.areg[i, j]),
                        "stderr": float(self.stderr[i, j]),
                        "worst": i == self.worst_index,
                    }
                )
        return pd.DataFrame(rows, columns=["permutation", "horizon", "areg", "stderr", "worst"])


def _monte_carlo_regret(
    pfa: Pfa, bandit: BernoulliBandit, horizon: int, reps: int, seed: int
) -> np.ndarray:
    """Get cumulative pseudo-regret, one row per replication."""
    rows = []
    for index in range(reps):
        trace = run(pfa, bandit, horizon, replication_rng(seed, index))
        rows.append(RegretTrace.from_run(trace.actions, trace.rewards, bandit).cumulative)
    return np.stack(rows)


def nonoptimality_demo(
    pfa: Pfa,
    bandit: BernoulliBandit,
    horizons: Sequence[int],
    reps: int = DEFAULT_REPLICATIONS,
    seed: int = DEFAULT_SEED,
    max_permutations: int = MAX_DEMO_PERMUTATIONS,
    exact: bool = False,
) -> NonOptimalityReport:
    """
    Estimate AReg of ``pfa`` on every permutation of ``bandit`` at each horizon.

    Args:
        pfa (Pfa): The automaton; its outputs must be the arms 1..K.
        bandit (BernoulliBandit): A generic bandit.
        horizons (Sequence[int]): The horizons N at which AReg is reported.
        reps (int): Monte Carlo replications per permutation.
        seed (int): The base seed; each permutation reuses seeds seed..seed+reps-1.
        max_permutations (int): Permutations sampled when K! is larger.
        exact (bool): Propagate the state distribution instead of sampling.

    Returns:
        NonOptimalityReport: The AReg table and the worst permutation.

    Raises:
        GenericityError: If the bandit is not generic.
        ConfigError: If the horizons or replications are invalid.
        StructureError: If the automaton's outputs are not the bandit's arms.
    """
    violation = genericity_violation(bandit)
    if violation is not None:
        logger.error(f"Bandit {bandit.means} is not generic: {violation}")
        raise GenericityError(f"bandit is not generic: {violation}")
    steps = np.array(sorted(set(int(h) for h in horizons)), dtype=np.int64)
    if steps.size == 0 or steps[0] < 1:
        message = "horizons: need at least one horizon, all at least 1"
        logger.error(message)
        raise ConfigError(message)
    if not exact and reps < 1:
        message = f"reps: must be at least 1, got {reps}"
        logger.error(message)
        raise ConfigError(message)
    if pfa.outputs != tuple(range(1, bandit.num_arms + 1)):
        message = f"PFA plays arms {pfa.outputs} but the bandit has {bandit.num_arms} arms."
        logger.error(message)
        raise StructureError(message)

    permutations = permutation_sample(bandit.num_arms, max_permutations, make_rng(seed))
    logger.info(
        f"Checking {len(permutations)} permutations of {bandit.means} "
        f"at horizons {steps.tolist()} ({'exact' if exact else f'{reps} replications'})"
    )
    horizon = int(steps[-1])
    half = max(horizon // 2, 1)
    areg = np.zeros((len(permutations), steps.size))
    stderr = np.zeros_like(areg)
    plateaus: List[float] = []
    for i, rho in enumerate(permutations):
        permuted = permute(bandit, rho)
        if exact:
            mean = expected_regret_curve(pfa, permuted, horizon)
        else:
            samples = _monte_carlo_regret(pfa, permuted, horizon, reps, seed)
            mean = samples.mean(axis=0)
            if reps > 1:
                spread = samples[:, steps - 1].std(axis=0, ddof=1) / np.sqrt(reps)
                stderr[i] = spread / steps
        areg[i] = mean[steps - 1] / steps
        if horizon > half:
            plateaus.append(float((mean[horizon - 1] - mean[half - 1]) / (horizon - half)))
        else:
            plateaus.append(float(mean[horizon - 1] / horizon))
        logger.debug(f"Permutation {rho.mapping}: AReg {areg[i].round(4).tolist()}")

    worst = int(np.argmax(areg[:, -1]))
    report = NonOptimalityReport(
        horizons=steps,
        permutations=permutations,
        areg=areg,
        stderr=stderr,
        reps=0 if exact else reps,
        plateau=plateaus[worst],
    )
    logger.info(
        f"Worst permutation {report.worst_permutation.mapping}: "
        f"AReg {report.worst_curve[-1]:.4f} at N={horizon}, plateau {report.plateau:.4f}"
    )
    return report


def parse_horizons(text: str) -> List[int]:
    """Parse a comma-separated horizon list such as ``100,1000,10000``."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        message = f"horizons: expected comma-separated integers, got {text!r}"
        logger.error(message)
        raise ConfigError(message) from None


def parse_means(text: str) -> List[float]:
    """Parse a comma-separated list of arm means such as ``0.7,0.3``."""
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        message = f"means: expected comma-separated numbers, got {text!r}"
        logger.error(message)
        raise ConfigError(message) from None
