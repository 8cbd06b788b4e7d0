"""
Result files.

Curve and summary CSVs have fixed headers and are written with pandas using a
``%.12g`` float format, so identical results give identical bytes.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Union

import pandas as pd
import yaml

from ..metrics.aggregate import AggregateCurve

logger = logging.getLogger(__name__)

CURVE_COLUMNS = ("step", "mean_cum_regret", "stderr", "reps")
SUMMARY_COLUMNS = (
    "protocol",
    "params",
    "mean_final_gap",
    "gap_stderr",
    "mean_cum_regret_at_horizon",
    "reps",
    "seed",
)
FLOAT_FORMAT = "%.12g"

PathLike = Union[str, Path]


def curve_frame(curve: AggregateCurve) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "step": curve.steps,
            "mean_cum_regret": curve.mean,
            "stderr": curve.stderr,
            "reps": curve.reps,
        },
        columns=list(CURVE_COLUMNS),
    )


def _write_csv(frame: pd.DataFrame, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path


def write_curve(curve: AggregateCurve, path: PathLike) -> Path:
    """Write a curve CSV with header ``step,mean_cum_regret,stderr,reps``."""
    return _write_csv(curve_frame(curve), path)


def write_summary(rows: Iterable[Mapping[str, Any]], path: PathLike) -> Path:
    """
    Write a summary CSV, one row per experiment.

    Args:
        rows (Iterable[Mapping[str, Any]]): Rows keyed by the summary columns.
        path (PathLike): The file to write.

    Returns:
        Path: The file written.
    """
    frame = pd.DataFrame(list(rows), columns=list(SUMMARY_COLUMNS))
    return _write_csv(frame, path)


def read_curve(path: PathLike) -> pd.DataFrame:
    """Read a curve CSV written by ``write_curve``."""
    return pd.read_csv(path)


def write_metadata(metadata: Dict[str, Any], path: PathLike) -> Path:
    """Write run metadata as YAML, keys in insertion order."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        yaml.safe_dump(metadata, handle, default_flow_style=False, sort_keys=False)
    logger.info(f"Wrote run metadata to {path}")
    return path
