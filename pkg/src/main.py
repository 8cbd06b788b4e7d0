#!/usr/bin/env python3
"""
Command-line entry point for the bandit automata.

Subcommands run simulations, reproduce the figure sweeps, report state counts,
demonstrate non-optimality of a fixed automaton, compile protocols to PFA
documents and plot curve files.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .automata.document import deserialize, serialize
from .bandit.bernoulli import BernoulliBandit
from .common.constants import (
    DEFAULT_ARMS,
    DEFAULT_REPLICATIONS,
    DEFAULT_SEED,
    DEFAULT_SETTLE_LIMIT,
)
from .common.exceptions import BanditAutomataError, ConfigError
from .harness.config import ExperimentConfig, load_config
from .harness.demo import nonoptimality_demo, parse_horizons, parse_means
from .harness.plot import plot_curves
from .harness.simulation import run_experiment
from .harness.states import format_table, state_count_report
from .harness.sweep import FIGURES, figure_sweep
from .protocols.compile import compile_stay_on_success, compiled_protocol, constant_pfa
from .protocols.registry import PROTOCOLS
from .version import __version__

logger = logging.getLogger(__name__)

COMPILE_TARGETS = ("aspiration", "elimination", "ete", "stay", "constant")


def _add_protocol_parameters(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("protocol parameters")
    group.add_argument("--m", type=int, help="aspiration ranks m")
    group.add_argument("--m1", type=int, help="accept threshold M1")
    group.add_argument("--m2", type=int, help="reject magnitude M2")
    group.add_argument("--m1c", type=int, help="coarse accept threshold M1'")
    group.add_argument("--m2c", type=int, help="coarse reject magnitude M2'")
    group.add_argument("--M", type=int, help="elimination counter threshold M")
    group.add_argument(
        "--N", type=int, help="elimination stop parameter, or plays per arm when exploring"
    )
    group.add_argument("--epsilon", type=float, help="epsilon-greedy exploration rate")


def _protocol_parameters(args: argparse.Namespace) -> dict:
    keys = ("m", "m1", "m2", "m1c", "m2c", "M", "N", "epsilon")
    return {key: getattr(args, key) for key in keys if getattr(args, key, None) is not None}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bandit-automata",
        description="Finite-state protocols for multi-armed bandits.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log debug output")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log warnings only")
    commands = parser.add_subparsers(dest="command", required=True)

    simulate = commands.add_parser("simulate", help="run one replicated experiment")
    simulate.add_argument("--config", type=Path, help="YAML experiment config")
    simulate.add_argument("--protocol", choices=sorted(PROTOCOLS))
    simulate.add_argument("--arms", type=int)
    simulate.add_argument("--horizon", type=int)
    simulate.add_argument("--reps", type=int)
    simulate.add_argument("--seed", type=int)
    simulate.add_argument("--means", type=str, help="comma-separated arm means")
    simulate.add_argument("--stride", type=int, help="steps between curve rows")
    simulate.add_argument("--workers", type=int)
    simulate.add_argument(
        "--settle", type=int, help="steps an uncommitted agent may play past the horizon"
    )
    simulate.add_argument("--out", type=str, help="output directory")
    _add_protocol_parameters(simulate)

    sweep = commands.add_parser("sweep", help="reproduce a regret figure")
    sweep.add_argument("--figure", choices=FIGURES, required=True)
    sweep.add_argument("--out", type=Path, required=True, help="output directory")
    sweep.add_argument("--quick", action="store_true", help="20 replications, 10,000 steps")
    sweep.add_argument("--reps", type=int)
    sweep.add_argument("--horizon", type=int)
    sweep.add_argument("--arms", type=int, default=DEFAULT_ARMS)
    sweep.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sweep.add_argument("--workers", type=int, default=1)
    sweep.add_argument("--settle", type=int, default=DEFAULT_SETTLE_LIMIT)

    states = commands.add_parser("states", help="report state counts")
    states.add_argument("--protocol", choices=sorted(PROTOCOLS), required=True)
    states.add_argument("--arms", type=int, default=DEFAULT_ARMS)
    states.add_argument(
        "--no-compile", action="store_true", help="print the closed form only"
    )
    _add_protocol_parameters(states)

    demo = commands.add_parser(
        "demo-nonoptimal", help="worst-permutation average regret of a PFA"
    )
    demo.add_argument("--pfa", type=Path, required=True, help="PFA document")
    demo.add_argument("--means", type=str, required=True, help="comma-separated arm means")
    demo.add_argument("--horizons", type=str, required=True, help="comma-separated horizons")
    demo.add_argument("--reps", type=int, default=DEFAULT_REPLICATIONS)
    demo.add_argument("--seed", type=int, default=DEFAULT_SEED)
    demo.add_argument("--exact", action="store_true", help="propagate the state distribution")
    demo.add_argument("--out", type=Path, help="CSV of AReg per permutation and horizon")

    compile_ = commands.add_parser("compile", help="write a protocol as a PFA document")
    compile_.add_argument("--protocol", choices=COMPILE_TARGETS, required=True)
    compile_.add_argument("--arms", type=int, default=DEFAULT_ARMS)
    compile_.add_argument("--arm", type=int, default=1, help="arm of the constant PFA")
    compile_.add_argument("--out", type=Path, required=True)
    _add_protocol_parameters(compile_)

    plot = commands.add_parser("plot", help="plot curve CSVs to SVG")
    plot.add_argument("curves", nargs="+", type=Path)
    plot.add_argument("--out", type=Path, required=True)
    plot.add_argument("--labels", type=str, help="comma-separated legend entries")
    plot.add_argument("--title", type=str)
    return parser


def _simulate(args: argparse.Namespace) -> None:
    config = load_config(args.config) if args.config else ExperimentConfig()
    config = config.with_overrides(
        protocol=args.protocol,
        arms=args.arms,
        horizon=args.horizon,
        reps=args.reps,
        seed=args.seed,
        means=parse_means(args.means) if args.means else None,
        stride=args.stride,
        workers=args.workers,
        settle=args.settle,
        out=args.out,
        **_protocol_parameters(args),
    )
    result = run_experiment(config)
    summary = result.summary
    print(
        f"{summary['protocol']} [{summary['params']}]: "
        f"mean final gap {summary['mean_final_gap']:.4f} "
        f"(+/- {summary['gap_stderr']:.4f}), "
        f"mean regret at horizon {summary['mean_cum_regret_at_horizon']:.2f}, "
        f"gap at horizon {result.extras['mean_exploit_gap']:.4f}, "
        f"policy gap {result.extras['mean_policy_gap']:.4f}, "
        f"settled past horizon {result.extras['settled_replications']}/{config.reps}"
    )


def _sweep(args: argparse.Namespace) -> None:
    results = figure_sweep(
        args.figure,
        out=args.out,
        quick=args.quick,
        reps=args.reps,
        horizon=args.horizon,
        arms=args.arms,
        seed=args.seed,
        workers=args.workers,
        settle=args.settle,
    )
    for label, result in results.items():
        extras = result.extras
        print(
            f"{label:<16} gap {result.mean_final_gap:.4f} "
            f"(+/- {result.summary['gap_stderr']:.4f})  "
            f"regret {result.curve.final_mean:.2f}  "
            f"committed {extras['committed_replications']}, "
            f"settled {extras['settled_replications']} of {result.config.reps}"
        )


def _states(args: argparse.Namespace) -> None:
    report = state_count_report(
        args.protocol,
        args.arms,
        _protocol_parameters(args),
        compile_states=not args.no_compile,
    )
    print(format_table([report]))


def _demo(args: argparse.Namespace) -> None:
    pfa = deserialize(args.pfa.read_text(encoding="utf-8"))
    bandit = BernoulliBandit(parse_means(args.means))
    report = nonoptimality_demo(
        pfa,
        bandit,
        parse_horizons(args.horizons),
        reps=args.reps,
        seed=args.seed,
        exact=args.exact,
    )
    print(f"permutations checked: {len(report.permutations)}")
    print(f"worst permutation: {' '.join(str(k) for k in report.worst_permutation.mapping)}")
    for horizon, areg, err in zip(
        report.horizons, report.worst_curve, report.stderr[report.worst_index]
    ):
        print(f"  N={int(horizon):<10} AReg {areg:.5f} (+/- {err:.5f})")
    print(f"plateau estimate: {report.plateau:.5f}")
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        report.frame().to_csv(args.out, index=False, float_format="%.12g", lineterminator="\n")
        logger.info(f"Wrote demo table to {args.out}")


def _compile(args: argparse.Namespace) -> None:
    if args.protocol == "stay":
        pfa = compile_stay_on_success(args.arms)
    elif args.protocol == "constant":
        pfa = constant_pfa(args.arms, args.arm)
    else:
        pfa = compiled_protocol(args.protocol, args.arms, **_protocol_parameters(args))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(serialize(pfa), encoding="utf-8")
    print(f"wrote {pfa.num_states} states to {args.out}")


def _plot(args: argparse.Namespace) -> None:
    labels = args.labels.split(",") if args.labels else None
    if labels is not None and len(labels) != len(args.curves):
        raise ConfigError(f"labels: {len(labels)} labels for {len(args.curves)} curves")
    plot_curves(args.curves, args.out, labels=labels, title=args.title)


COMMANDS = {
    "simulate": _simulate,
    "sweep": _sweep,
    "states": _states,
    "demo-nonoptimal": _demo,
    "compile": _compile,
    "plot": _plot,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Returns:
        int: 0 on success, 2 on a validation error, 1 on an I/O error.
    """
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(
        level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )
    try:
        COMMANDS[args.command](args)
    except BanditAutomataError as exc:
        logger.error(f"{args.command}: {exc}")
        return 2
    except OSError as exc:
        logger.error(f"{args.command}: {exc}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
