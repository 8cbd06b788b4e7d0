"""
Replicated simulation of one protocol.

Replication ``i`` draws its bandit (when generated) and all of its coins from
its own stream seeded ``seed + i``, so results never depend on how
replications are spread over workers.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..bandit.bernoulli import BernoulliBandit
from ..common.constants import BETA_SAMPLER, RNG_ALGORITHM
from ..common.rng import replication_rng, replication_seed, settlement_rng
from ..common.timer import Timer
from ..metrics.aggregate import AggregateCurve, aggregate_samples, step_grid
from ..metrics.regret import RegretTrace, final_gap, limiting_gap, policy_gap
from ..protocols.agent import Agent
from ..protocols.registry import format_parameters, make_agent, protocol_info
from ..version import __version__
from .config import ExperimentConfig
from .output import write_curve, write_metadata, write_summary

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReplicationResult:
    """
    What one replication contributes to the aggregate.

    Attributes:
        index (int): The replication index.
        curve (np.ndarray): Cumulative pseudo-regret on the step grid.
        final_gap (float): The limiting gap: mu* - mu of the committed arm, or the
            policy gap for agents that never commit.
        exploit_gap (float): mu* - mu of the agent's exploit choice at the horizon.
        policy_gap (float): Expected gap of the agent's next choice at the horizon.
        realized_regret (float): N mu* minus the rewards collected.
        committed_step (Optional[int]): The step after which one arm was played
            for good, if the agent committed within the horizon.
        settle_steps (Optional[int]): Steps played past the horizon before the
            agent committed; None if it was never played past the horizon or
            did not commit within the settle limit.
    """

    index: int
    curve: np.ndarray
    final_gap: float
    exploit_gap: float
    policy_gap: float
    realized_regret: float
    committed_step: Optional[int]
    settle_steps: Optional[int] = None


@dataclass
class ExperimentResult:
    """
    Aggregated outcome of an experiment.

    Attributes:
        config (ExperimentConfig): The resolved config.
        curve (AggregateCurve): Mean cumulative regret on the step grid.
        summary (Dict[str, Any]): The summary CSV row.
        replications (List[ReplicationResult]): Per-replication results by index.
        extras (Dict[str, Any]): Diagnostics recorded in ``run.yaml``.
    """

    config: ExperimentConfig
    curve: AggregateCurve
    summary: Dict[str, Any]
    replications: List[ReplicationResult]
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def mean_final_gap(self) -> float:
        return float(self.summary["mean_final_gap"])


def play(
    agent: Agent, bandit: BernoulliBandit, horizon: int, rng: np.random.Generator
) -> Tuple[np.ndarray, np.ndarray, Optional[int]]:
    """
    Let ``agent`` play ``horizon`` steps.

    Once the agent reports a committed arm the remaining pulls are drawn in
    one block; the agent is not consulted again.

    Returns:
        Tuple[np.ndarray, np.ndarray, Optional[int]]: Actions, rewards and
            the number of steps played before commitment.
    """
    actions = np.empty(horizon, dtype=np.int64)
    rewards = np.empty(horizon, dtype=np.int8)
    for t in range(horizon):
        committed = agent.committed_arm
        if committed is not None:
            actions[t:] = committed
            rewards[t:] = bandit.pull_many(committed, horizon - t, rng)
            return actions, rewards, t
        arm = agent.choose(rng)
        reward = bandit.pull(arm, rng)
        agent.observe(arm, reward, rng)
        actions[t] = arm
        rewards[t] = reward
    return actions, rewards, (horizon if agent.committed_arm is not None else None)


def settle(
    agent: Agent, bandit: BernoulliBandit, limit: int, rng: np.random.Generator
) -> Optional[int]:
    """
    Keep playing an uncommitted agent until it commits.

    Nothing played here is charged to the regret curve.

    Args:
        agent (Agent): The agent, as left at the horizon.
        bandit (BernoulliBandit): The bandit it plays.
        limit (int): The most steps to play.
        rng (np.random.Generator): A stream separate from the replication's own.

    Returns:
        Optional[int]: Steps played before the agent committed, or None if it
            did not commit within ``limit`` steps.
    """
    for t in range(limit):
        if agent.committed_arm is not None:
            return t
        arm = agent.choose(rng)
        agent.observe(arm, bandit.pull(arm, rng), rng)
    return limit if agent.committed_arm is not None else None


def run_replication(
    config: ExperimentConfig, index: int, steps: Optional[np.ndarray] = None
) -> ReplicationResult:
    """
    Run replication ``index`` of ``config``.

    A finite-state agent still testing arms at the horizon is played on,
    up to ``config.settle`` steps, so that its final gap is that of the arm it
    commits to rather than of the arm it happens to be testing.

    Args:
        config (ExperimentConfig): The experiment.
        index (int): The zero-based replication index.
        steps (Optional[np.ndarray]): The curve grid; derived from the config if omitted.

    Returns:
        ReplicationResult: The replication's contribution.
    """
    if steps is None:
        steps = step_grid(config.horizon, config.curve_stride)
    rng = replication_rng(config.seed, index)
    bandit = config.make_bandit(rng)
    agent = make_agent(config.protocol, bandit.num_arms, config.parameters)
    actions, rewards, committed_step = play(agent, bandit, config.horizon, rng)
    trace = RegretTrace.from_run(actions, rewards, bandit)
    exploit_gap = final_gap(agent, bandit)
    horizon_policy_gap = policy_gap(agent, bandit)

    settle_steps = None
    if (
        agent.committed_arm is None
        and config.settle > 0
        and protocol_info(config.protocol).finite
    ):
        settle_rng = settlement_rng(config.seed, index)
        settle_steps = settle(agent, bandit, config.settle, settle_rng)
        if settle_steps is None:
            logger.warning(
                f"Replication {index}: {config.protocol} did not commit within "
                f"{config.settle} steps past the horizon"
            )
    logger.debug(
        f"Replication {index} (seed {replication_seed(config.seed, index)}): "
        f"regret {trace.regret(trace.horizon):.3f}, committed at {committed_step}, "
        f"settled after {settle_steps}"
    )
    return ReplicationResult(
        index=index,
        curve=trace.cumulative[steps - 1],
        final_gap=limiting_gap(agent, bandit),
        exploit_gap=exploit_gap,
        policy_gap=horizon_policy_gap,
        realized_regret=trace.realized_regret(),
        committed_step=committed_step,
        settle_steps=settle_steps,
    )


def _mean_and_stderr(values: np.ndarray) -> Tuple[float, float]:
    if values.size > 1:
        return float(values.mean()), float(values.std(ddof=1) / np.sqrt(values.size))
    return float(values.mean()), 0.0


def run_replications(config: ExperimentConfig) -> List[ReplicationResult]:
    """
    Run every replication of ``config``, in a worker pool if ``workers`` > 1.

    Returns:
        List[ReplicationResult]: Results ordered by replication index.
    """
    steps = step_grid(config.horizon, config.curve_stride)
    worker = partial(run_replication, config, steps=steps)
    if config.workers > 1 and config.reps > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            results = list(executor.map(worker, range(config.reps)))
    else:
        results = [worker(index) for index in range(config.reps)]
    return sorted(results, key=lambda result: result.index)


def summarize(
    config: ExperimentConfig, results: List[ReplicationResult]
) -> ExperimentResult:
    """Aggregate replication results into a curve, a summary row and diagnostics."""
    steps = step_grid(config.horizon, config.curve_stride)
    curve = aggregate_samples(np.stack([r.curve for r in results]), steps)
    gap, gap_stderr = _mean_and_stderr(np.array([r.final_gap for r in results]))
    summary = {
        "protocol": config.protocol,
        "params": format_parameters(config.parameters),
        "mean_final_gap": gap,
        "gap_stderr": gap_stderr,
        "mean_cum_regret_at_horizon": curve.final_mean,
        "reps": config.reps,
        "seed": config.seed,
    }
    committed = [r.committed_step for r in results if r.committed_step is not None]
    settled = [r.settle_steps for r in results if r.settle_steps is not None]
    extras = {
        "mean_exploit_gap": float(np.mean([r.exploit_gap for r in results])),
        "mean_policy_gap": float(np.mean([r.policy_gap for r in results])),
        "mean_realized_regret": float(np.mean([r.realized_regret for r in results])),
        "committed_replications": len(committed),
        "mean_commitment_step": float(np.mean(committed)) if committed else None,
        "settled_replications": sum(r.settle_steps is not None for r in results),
        "mean_settle_steps": float(np.mean(settled)) if settled else None,
    }
    return ExperimentResult(config, curve, summary, results, extras)


def write_results(result: ExperimentResult, out: Path, prefix: str = "") -> None:
    """
    Write ``<prefix>curve.csv``, ``<prefix>summary.csv`` and ``<prefix>run.yaml`` to ``out``.
    """
    out = Path(out)
    write_curve(result.curve, out / f"{prefix}curve.csv")
    write_summary([result.summary], out / f"{prefix}summary.csv")
    metadata: Dict[str, Any] = {
        "version": __version__,
        "rng": RNG_ALGORITHM,
        "beta_sampler": BETA_SAMPLER,
        "config": result.config.to_mapping(),
    }
    metadata.update(result.extras)
    write_metadata(metadata, out / f"{prefix}run.yaml")


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """
    Run ``config`` and write its result files when ``config.out`` is set.

    Args:
        config (ExperimentConfig): The experiment.

    Returns:
        ExperimentResult: The aggregated outcome.

    Raises:
        OSError: If the output directory cannot be written.
    """
    logger.info(
        f"Running {config.protocol} ({format_parameters(config.parameters)}) "
        f"K={config.arms}, horizon {config.horizon}, {config.reps} replications, "
        f"seed {config.seed}, {config.workers} worker(s)"
    )
    with Timer() as timer:
        results = run_replications(config)
    result = summarize(config, results)
    logger.info(
        f"Finished {config.protocol} in {timer.elapsed():.1f}s: "
        f"mean final gap {result.mean_final_gap:.4f}, "
        f"mean regret at horizon {result.curve.final_mean:.1f}"
    )
    if config.out is not None:
        write_results(result, Path(config.out))
    return result
