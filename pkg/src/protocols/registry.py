"""
Protocol lookup by id.

Maps the config ids ``aspiration``, ``aspiration2``, ``elimination``, ``ete``,
``egreedy`` and ``thompson`` to agent factories and their parameter keys.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Mapping, Optional

from ..common.constants import (
    DEFAULT_ACCEPT_THRESHOLD,
    DEFAULT_COARSE_ACCEPT_THRESHOLD,
    DEFAULT_COARSE_REJECT_THRESHOLD,
    DEFAULT_COUNTER_THRESHOLD,
    DEFAULT_EPSILON,
    DEFAULT_EPSILON_EXPLORATION,
    DEFAULT_EXPLORATION,
    DEFAULT_RANKS,
    DEFAULT_REJECT_THRESHOLD,
    DEFAULT_STOP_PARAMETER,
)
from ..common.exceptions import ConfigError
from .agent import Agent
from .aspiration import aspiration_agent, aspiration_two_phase
from .elimination import elimination_agent
from .explore_exploit import epsilon_greedy, explore_then_exploit
from .thompson import thompson_agent

logger = logging.getLogger(__name__)

PARAMETER_KEYS = ("m", "m1", "m2", "m1c", "m2c", "M", "N", "epsilon")


@dataclass(frozen=True)
class ProtocolInfo:
    """
    How to build one protocol.

    Attributes:
        name (str): The protocol id.
        factory (Callable[..., Agent]): Called with K and the parameters in order.
        defaults (Dict[str, Any]): Parameter keys in factory order, with defaults.
        finite (bool): Whether the protocol has a bounded state space.
    """

    name: str
    factory: Callable[..., Agent]
    defaults: Dict[str, Any] = field(default_factory=dict)
    finite: bool = True


PROTOCOLS: Dict[str, ProtocolInfo] = {
    "aspiration": ProtocolInfo(
        "aspiration",
        aspiration_agent,
        {"m": DEFAULT_RANKS, "m1": DEFAULT_ACCEPT_THRESHOLD, "m2": DEFAULT_REJECT_THRESHOLD},
    ),
    "aspiration2": ProtocolInfo(
        "aspiration2",
        aspiration_two_phase,
        {
            "m": DEFAULT_RANKS,
            "m1": DEFAULT_ACCEPT_THRESHOLD,
            "m2": DEFAULT_REJECT_THRESHOLD,
            "m1c": DEFAULT_COARSE_ACCEPT_THRESHOLD,
            "m2c": DEFAULT_COARSE_REJECT_THRESHOLD,
        },
    ),
    "elimination": ProtocolInfo(
        "elimination",
        elimination_agent,
        {"M": DEFAULT_COUNTER_THRESHOLD, "N": DEFAULT_STOP_PARAMETER},
    ),
    "ete": ProtocolInfo("ete", explore_then_exploit, {"N": DEFAULT_EXPLORATION}),
    "egreedy": ProtocolInfo(
        "egreedy",
        epsilon_greedy,
        {"N": DEFAULT_EPSILON_EXPLORATION, "epsilon": DEFAULT_EPSILON},
        finite=False,
    ),
    "thompson": ProtocolInfo("thompson", thompson_agent, {}, finite=False),
}


def protocol_info(protocol: str) -> ProtocolInfo:
    """
    Look up a protocol id.

    Raises:
        ConfigError: If the id is unknown.
    """
    try:
        return PROTOCOLS[protocol]
    except KeyError:
        message = (
            f"protocol: unknown protocol {protocol!r}; "
            f"expected one of {sorted(PROTOCOLS)}"
        )
        logger.error(message)
        raise ConfigError(message) from None


def resolve_parameters(
    protocol: str, params: Optional[Mapping[str, Any]] = None
) -> Dict[str, Any]:
    """
    Fill in defaults for the parameters ``protocol`` takes.

    Args:
        protocol (str): The protocol id.
        params (Optional[Mapping[str, Any]]): Given parameters; ``None`` values
            mean "use the default".

    Returns:
        Dict[str, Any]: Every parameter of the protocol, in factory order.

    Raises:
        ConfigError: If the protocol is unknown or a parameter does not apply to it.
    """
    info = protocol_info(protocol)
    given = {key: value for key, value in (params or {}).items() if value is not None}
    stray = sorted(set(given) - set(info.defaults))
    if stray:
        message = f"{stray[0]}: parameter does not apply to protocol {protocol!r}"
        logger.error(message)
        raise ConfigError(message)
    return {key: given.get(key, default) for key, default in info.defaults.items()}


def format_parameters(params: Mapping[str, Any]) -> str:
    """Render parameters as ``key=value`` pairs joined by ``;``, for CSV cells."""
    return ";".join(f"{key}={value}" for key, value in params.items())


def make_agent(
    protocol: str, num_arms: int, params: Optional[Mapping[str, Any]] = None
) -> Agent:
    """
    Build a fresh agent.

    Args:
        protocol (str): The protocol id.
        num_arms (int): The number of arms K.
        params (Optional[Mapping[str, Any]]): Protocol parameters.

    Returns:
        Agent: The agent, in its initial state.

    Raises:
        ConfigError: If the protocol or a parameter key is unknown.
        ParameterError: If a parameter value is out of range.
    """
    info = protocol_info(protocol)
    resolved = resolve_parameters(protocol, params)
    return info.factory(num_arms, *resolved.values())

