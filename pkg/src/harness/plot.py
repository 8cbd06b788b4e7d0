"""
Line charts of regret curves.
"""

import logging
from pathlib import Path
from typing import Optional, Sequence, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .output import read_curve  # noqa: E402

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def plot_curves(
    curves: Sequence[PathLike],
    out: PathLike,
    labels: Optional[Sequence[str]] = None,
    title: Optional[str] = None,
    band: bool = True,
) -> Path:
    """
    Draw mean cumulative regret of one or more curve CSVs into an SVG file.

    Args:
        curves (Sequence[PathLike]): Curve CSVs written by ``write_curve``.
        out (PathLike): The SVG file to write.
        labels (Optional[Sequence[str]]): Legend entries; file stems by default.
        title (Optional[str]): The chart title.
        band (bool): Shade one standard error around each mean.

    Returns:
        Path: The file written.
    """
    out = Path(out)
    if labels is None:
        labels = [Path(path).stem for path in curves]
    svg_metadata = {"Date": None}  # keep output bytes stable

    fig, ax = plt.subplots(figsize=(8, 5))
    try:
        for path, label in zip(curves, labels):
            frame = read_curve(path)
            ax.plot(frame["step"], frame["mean_cum_regret"], label=label, linewidth=1.2)
            if band:
                ax.fill_between(
                    frame["step"],
                    frame["mean_cum_regret"] - frame["stderr"],
                    frame["mean_cum_regret"] + frame["stderr"],
                    alpha=0.2,
                )
        ax.set_xlabel("step")
        ax.set_ylabel("mean cumulative regret")
        if title:
            ax.set_title(title)
        ax.grid(True, alpha=0.3)
        ax.legend()
        out.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(out, format="svg", metadata=svg_metadata, bbox_inches="tight")
    finally:
        plt.close(fig)
    logger.info(f"Plotted {len(curves)} curve(s) to {out}")
    return out
