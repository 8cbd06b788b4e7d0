"""
State-count reporting for the finite-state protocols.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional

from ..automata.analysis import reachable_state_count
from ..common.constants import DEFAULT_ARMS, MAX_COMPILED_STATES
from ..common.exceptions import ConfigError
from ..common.timer import Timer
from ..protocols.compile import (
    aspiration_state_count,
    compiled_protocol,
    elimination_state_count,
    explore_then_exploit_state_count,
)
from ..protocols.registry import format_parameters, protocol_info, resolve_parameters

logger = logging.getLogger(__name__)

INFINITE = "infinite-state"
SKIPPED = "skipped"
COMPILABLE = ("aspiration", "elimination", "ete")


@dataclass(frozen=True)
class StateCountReport:
    """
    Closed-form and compiled state counts of one protocol.

    Attributes:
        protocol (str): The protocol id.
        params (Dict[str, Any]): The resolved parameters.
        arms (int): The number of arms K.
        formula (Optional[int]): The closed-form count; ``None`` for infinite-state protocols.
        compiled (Optional[int]): Reachable states of the compiled PFA, when compiled.
        note (str): ``infinite-state``, ``skipped`` or empty.
    """

    protocol: str
    params: Dict[str, Any]
    arms: int
    formula: Optional[int]
    compiled: Optional[int]
    note: str = ""

    @property
    def infinite(self) -> bool:
        return self.note == INFINITE

    @property
    def bits(self) -> Optional[int]:
        """Get ceil(log2(count)), the bits needed to number the states."""
        if self.formula is None:
            return None
        return (self.formula - 1).bit_length()

    def row(self) -> Dict[str, str]:
        def cell(value: Optional[int]) -> str:
            return self.note if value is None else str(value)

        return {
            "protocol": self.protocol,
            "params": format_parameters(self.params),
            "K": str(self.arms),
            "formula": cell(self.formula),
            "compiled": cell(self.compiled),
            "bits": cell(self.bits),
        }


def state_count_formula(protocol: str, arms: int, params: Mapping[str, Any]) -> int:
    if protocol == "aspiration":
        return aspiration_state_count(arms, params["m"], params["m1"], params["m2"])
    if protocol == "elimination":
        return elimination_state_count(arms, params["M"])
    return explore_then_exploit_state_count(arms, params["N"])


def state_count_report(
    protocol: str,
    arms: int = DEFAULT_ARMS,
    params: Optional[Mapping[str, Any]] = None,
    compile_states: bool = True,
) -> StateCountReport:
    """
    Report the closed-form state count next to the compiled reachable count.

    Args:
        protocol (str): The protocol id.
        arms (int): The number of arms K.
        params (Optional[Mapping[str, Any]]): Protocol parameters.
        compile_states (bool): Whether to compile and count reachable states.

    Returns:
        StateCountReport: The counts; infinite-state protocols get a marker.

    Raises:
        ConfigError: If the protocol is finite-state but has no compiled form.
    """
    info = protocol_info(protocol)
    resolved = resolve_parameters(protocol, params)
    if not info.finite:
        logger.info(f"{protocol} keeps unbounded counts; reporting {INFINITE}")
        return StateCountReport(protocol, resolved, arms, None, None, INFINITE)
    if protocol not in COMPILABLE:
        message = (
            f"protocol: {protocol!r} has no compiled form; "
            f"expected one of {list(COMPILABLE)}"
        )
        logger.error(message)
        raise ConfigError(message)

    formula = state_count_formula(protocol, arms, resolved)
    if not compile_states or formula > MAX_COMPILED_STATES:
        return StateCountReport(protocol, resolved, arms, formula, None, SKIPPED)
    with Timer() as timer:
        pfa = compiled_protocol(protocol, arms, **resolved)
        compiled = reachable_state_count(pfa)
    logger.info(
        f"{protocol}: formula {formula}, compiled {compiled} "
        f"({timer.elapsed():.1f}s)"
    )
    if compiled != formula:
        logger.warning(f"{protocol}: compiled count {compiled} differs from formula {formula}")
    return StateCountReport(protocol, resolved, arms, formula, compiled)


def format_table(reports: List[StateCountReport]) -> str:
    """Render reports as an aligned text table."""
    rows = [report.row() for report in reports]
    columns = ["protocol", "params", "K", "formula", "compiled", "bits"]
    widths = {
        column: max([len(column)] + [len(row[column]) for row in rows])
        for column in columns
    }
    lines = ["  ".join(column.ljust(widths[column]) for column in columns)]
    for row in rows:
        lines.append("  ".join(row[column].ljust(widths[column]) for column in columns))
    return "\n".join(lines)
