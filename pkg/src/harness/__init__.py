"""
Harness module for the bandit automata.

This module provides experiment configuration, replicated simulation, the
figure sweeps, state-count reporting, the non-optimality demonstration and
result files.
"""

from .config import ExperimentConfig, load_config
from .demo import NonOptimalityReport, nonoptimality_demo
from .output import CURVE_COLUMNS, SUMMARY_COLUMNS, write_curve, write_summary
from .simulation import (
    ExperimentResult,
    ReplicationResult,
    play,
    run_experiment,
    run_replication,
)
from .states import StateCountReport, state_count_report
from .sweep import FIGURES, figure_settings, figure_sweep

__all__ = [
    "CURVE_COLUMNS",
    "ExperimentConfig",
    "ExperimentResult",
    "FIGURES",
    "NonOptimalityReport",
    "ReplicationResult",
    "StateCountReport",
    "SUMMARY_COLUMNS",
    "figure_settings",
    "figure_sweep",
    "load_config",
    "nonoptimality_demo",
    "play",
    "run_experiment",
    "run_replication",
    "state_count_report",
    "write_curve",
    "write_summary",
]
