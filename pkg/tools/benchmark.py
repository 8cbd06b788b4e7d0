"""
Benchmarking tool for the bandit automata.
This script measures how many bandit steps per second each protocol plays,
both as a direct agent and, for the finite-state protocols, as a compiled PFA.
"""

import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(str(Path(__file__).parent.parent))

from src.automata.engine import run
from src.bandit.bernoulli import sample_bandit
from src.common.rng import make_rng
from src.common.timer import Timer
from src.protocols.compile import compiled_protocol
from src.protocols.registry import PROTOCOLS, make_agent


def benchmark_agent(protocol: str, num_arms: int = 50, num_steps: int = 20_000) -> float:
    """
    Benchmark the choose/observe loop of one protocol.

    Commitment is not short-cut here, so every step goes through the agent.

    Args:
        protocol (str): The protocol id.
        num_arms (int): The number of arms.
        num_steps (int): The number of steps to play.

    Returns:
        float: Steps per second.
    """
    rng = make_rng(0)
    bandit = sample_bandit(num_arms, rng)
    agent = make_agent(protocol, num_arms)

    with Timer() as timer:
        for _ in range(num_steps):
            arm = agent.choose(rng)
            agent.observe(arm, bandit.pull(arm, rng), rng)

    return timer.rate(num_steps)


def benchmark_pfa(protocol: str, num_arms: int = 50, num_steps: int = 20_000) -> float:
    """
    Benchmark a compiled PFA run, including the absorbing-state fast path.

    Args:
        protocol (str): ``aspiration``, ``elimination`` or ``ete``.
        num_arms (int): The number of arms.
        num_steps (int): The number of steps to play.

    Returns:
        float: Steps per second.
    """
    rng = make_rng(0)
    bandit = sample_bandit(num_arms, rng)
    params = {"N": 2} if protocol == "ete" else {}
    pfa = compiled_protocol(protocol, num_arms, **params)

    with Timer() as timer:
        run(pfa, bandit, num_steps, rng)

    return timer.rate(num_steps)


def run_benchmark() -> None:
    """
    Run a series of benchmarks over every protocol.
    """
    print("Running protocol benchmarks (agents)...\n")

    for protocol in sorted(PROTOCOLS):
        rate = benchmark_agent(protocol)
        print(f"Protocol: {protocol:<12} Steps per second: {rate:,.0f}")

    print("\nBenchmarking compiled PFAs...\n")

    for protocol, num_arms in (("aspiration", 50), ("elimination", 50), ("ete", 5)):
        rate = benchmark_pfa(protocol, num_arms)
        print(f"PFA: {protocol:<12} K={num_arms:<3} Steps per second: {rate:,.0f}")


if __name__ == "__main__":
    run_benchmark()
