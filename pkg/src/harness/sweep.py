"""
Parameter sweeps behind the regret figures.

Each figure is a list of settings run with the same base seed, so with
generated bandits every setting faces the same sequence of instances.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ..common.constants import (
    DEFAULT_ARMS,
    DEFAULT_HORIZON,
    DEFAULT_REPLICATIONS,
    DEFAULT_SEED,
    DEFAULT_SETTLE_LIMIT,
    QUICK_HORIZON,
    QUICK_REPLICATIONS,
)
from ..common.exceptions import ConfigError
from .config import ExperimentConfig
from .output import write_summary
from .simulation import ExperimentResult, run_experiment, write_results

logger = logging.getLogger(__name__)

RANK_GRID = (50, 100, 200, 500)
THRESHOLD_GRID = ((10, 2), (20, 3), (30, 4), (40, 5))
ELIMINATION_GRID = ((1000, 10), (1000, 20), (1000, 100), (100, 10), (100, 20))
COMPARE_PROTOCOLS = ("elimination", "aspiration2", "egreedy", "thompson")
FIGURES = ("m", "thresholds", "elimination", "compare")


@dataclass(frozen=True)
class Setting:
    """One curve of a figure: a label and the config keys that define it."""

    label: str
    protocol: str
    params: Tuple[Tuple[str, Any], ...] = ()


def figure_settings(figure: str) -> List[Setting]:
    """
    List the settings of ``figure``.

    Args:
        figure (str): One of ``m``, ``thresholds``, ``elimination`` or ``compare``.

    Returns:
        List[Setting]: The settings in plotting order.

    Raises:
        ConfigError: If the figure id is unknown.
    """
    if figure == "m":
        return [
            Setting(f"m{m}", "aspiration", (("m", m), ("m1", 20), ("m2", 3)))
            for m in RANK_GRID
        ]
    if figure == "thresholds":
        return [
            Setting(f"m1_{m1}_m2_{m2}", "aspiration", (("m", 100), ("m1", m1), ("m2", m2)))
            for m1, m2 in THRESHOLD_GRID
        ]
    if figure == "elimination":
        return [
            Setting(f"N{n}_M{m}", "elimination", (("N", n), ("M", m)))
            for n, m in ELIMINATION_GRID
        ]
    if figure == "compare":
        return [Setting(protocol, protocol) for protocol in COMPARE_PROTOCOLS]
    message = f"figure: unknown figure {figure!r}; expected one of {list(FIGURES)}"
    logger.error(message)
    raise ConfigError(message)


def figure_sweep(
    figure: str,
    out: Optional[Path] = None,
    quick: bool = False,
    reps: Optional[int] = None,
    horizon: Optional[int] = None,
    arms: int = DEFAULT_ARMS,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
    settle: int = DEFAULT_SETTLE_LIMIT,
) -> Dict[str, ExperimentResult]:
    """
    Run every setting of ``figure``.

    When ``out`` is given, writes the files of ``write_results`` prefixed
    with each setting label, plus one ``summary.csv`` with a row per setting.

    Args:
        figure (str): The figure id.
        out (Optional[Path]): The output directory.
        quick (bool): Use the reduced preset (20 replications, 10,000 steps).
        reps (Optional[int]): Replications, overriding the preset.
        horizon (Optional[int]): Horizon, overriding the preset.
        arms (int): The number of arms K.
        seed (int): The base seed shared by all settings.
        workers (int): Worker processes per setting.
        settle (int): Steps an uncommitted agent may play past the horizon.

    Returns:
        Dict[str, ExperimentResult]: Results keyed by setting label.
    """
    settings = figure_settings(figure)
    if reps is None:
        reps = QUICK_REPLICATIONS if quick else DEFAULT_REPLICATIONS
    if horizon is None:
        horizon = QUICK_HORIZON if quick else DEFAULT_HORIZON
    logger.info(
        f"Sweeping figure {figure!r}: {len(settings)} settings, {reps} replications, "
        f"horizon {horizon}"
    )

    results: Dict[str, ExperimentResult] = {}
    for setting in settings:
        config = ExperimentConfig(
            protocol=setting.protocol,
            arms=arms,
            horizon=horizon,
            reps=reps,
            seed=seed,
            workers=workers,
            settle=settle,
            params=dict(setting.params),
        )
        result = run_experiment(config)
        results[setting.label] = result
        if out is not None:
            write_results(result, Path(out), prefix=f"{setting.label}_")

    if out is not None:
        rows = [result.summary for result in results.values()]
        write_summary(rows, Path(out) / "summary.csv")
    return results
