"""
Experiment configuration.

Configs are flat YAML mappings. Every key is optional; unknown keys, wrong
types and out-of-range values raise ``ConfigError`` naming the key.
"""

import logging
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import numpy as np
import yaml

from ..bandit.bernoulli import BernoulliBandit, sample_bandit
from ..common.constants import (
    DEFAULT_ARMS,
    DEFAULT_CURVE_ROWS,
    DEFAULT_HORIZON,
    DEFAULT_REPLICATIONS,
    DEFAULT_SEED,
    DEFAULT_SETTLE_LIMIT,
)
from ..common.exceptions import ConfigError
from ..protocols.registry import PARAMETER_KEYS, protocol_info, resolve_parameters

logger = logging.getLogger(__name__)

GENERATORS = ("uniform-alpha",)
_INT_KEYS = ("arms", "horizon", "reps", "seed", "stride", "workers", "settle")


def _fail(message: str) -> ConfigError:
    logger.error(f"Invalid experiment config: {message}")
    return ConfigError(message)


def _as_int(key: str, value: Any, minimum: Optional[int] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise _fail(f"{key}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise _fail(f"{key}: must be at least {minimum}, got {value}")
    return int(value)


@dataclass(frozen=True)
class ExperimentConfig:
    """
    One simulation experiment.

    Attributes:
        protocol (str): The protocol id.
        arms (int): The number of arms K.
        horizon (int): Steps per replication.
        reps (int): The number of replications.
        seed (int): The base seed; replication i uses seed + i.
        means (Optional[Tuple[float, ...]]): Fixed arm means; a fresh bandit
            is generated per replication when ``None``.
        generator (str): The bandit generator used when ``means`` is ``None``.
        out (Optional[str]): The output directory.
        stride (Optional[int]): Steps between curve rows; horizon/500 by default.
        workers (int): Worker processes for replications.
        settle (int): Steps an uncommitted finite-state agent may keep playing
            after the horizon so its final gap is read from the arm it commits
            to; 0 reads the gap at the horizon.
        params (Dict[str, Any]): Protocol parameters (m, m1, m2, m1c, m2c, M, N, epsilon).
    """

    protocol: str = "aspiration"
    arms: int = DEFAULT_ARMS
    horizon: int = DEFAULT_HORIZON
    reps: int = DEFAULT_REPLICATIONS
    seed: int = DEFAULT_SEED
    means: Optional[Tuple[float, ...]] = None
    generator: str = "uniform-alpha"
    out: Optional[str] = None
    stride: Optional[int] = None
    workers: int = 1
    settle: int = DEFAULT_SETTLE_LIMIT
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        """
        Check every field.

        Raises:
            ConfigError: Naming the first offending key.
        """
        protocol_info(self.protocol)
        _as_int("arms", self.arms, 1)
        _as_int("horizon", self.horizon, 1)
        _as_int("reps", self.reps, 1)
        _as_int("seed", self.seed, 0)
        _as_int("workers", self.workers, 1)
        _as_int("settle", self.settle, 0)
        if self.stride is not None:
            _as_int("stride", self.stride, 1)
        if self.generator not in GENERATORS:
            raise _fail(f"generator: unknown generator {self.generator!r}")
        if self.means is not None:
            if len(self.means) != self.arms:
                raise _fail(f"means: {len(self.means)} means given for {self.arms} arms")
            if any(not 0.0 <= mu <= 1.0 for mu in self.means):
                raise _fail("means: every mean must lie in [0, 1]")
        for key, value in self.params.items():
            if key not in PARAMETER_KEYS:
                raise _fail(f"{key}: unknown key")
            if key == "epsilon":
                if isinstance(value, bool) or not isinstance(value, (int, float)):
                    raise _fail(f"epsilon: expected a number, got {value!r}")
                if not 0.0 <= value <= 1.0:
                    raise _fail(f"epsilon: must lie in [0, 1], got {value}")
            else:
                _as_int(key, value, 1)
        resolve_parameters(self.protocol, self.params)

    @property
    def curve_stride(self) -> int:
        """Get the stride between curve rows."""
        if self.stride is not None:
            return self.stride
        return max(self.horizon // DEFAULT_CURVE_ROWS, 1)

    @property
    def parameters(self) -> Dict[str, Any]:
        """Get the protocol parameters with defaults filled in."""
        return resolve_parameters(self.protocol, self.params)

    def make_bandit(self, rng: np.random.Generator) -> BernoulliBandit:
        """Get the replication's bandit: the fixed means, or a fresh draw from ``rng``."""
        if self.means is not None:
            return BernoulliBandit(self.means)
        return sample_bandit(self.arms, rng)

    def with_overrides(self, **overrides: Any) -> "ExperimentConfig":
        """
        Copy the config with some keys replaced; ``None`` values are ignored.

        Protocol parameters may be given by their own keys.
        """
        overrides = {key: value for key, value in overrides.items() if value is not None}
        params = dict(self.params)
        if "protocol" in overrides and overrides["protocol"] != self.protocol:
            # Parameters of the previous protocol do not carry over.
            params = {key: value for key, value in params.items()
                      if key in protocol_info(overrides["protocol"]).defaults}
        for key in PARAMETER_KEYS:
            if key in overrides:
                params[key] = overrides.pop(key)
        if "means" in overrides:
            overrides["means"] = tuple(float(mu) for mu in overrides["means"])
            overrides.setdefault("arms", len(overrides["means"]))
        return replace(self, params=params, **overrides)

    def to_mapping(self) -> Dict[str, Any]:
        """Get the resolved config as a flat mapping, ready for YAML."""
        data: Dict[str, Any] = {
            "protocol": self.protocol,
            "arms": self.arms,
            "horizon": self.horizon,
            "reps": self.reps,
            "seed": self.seed,
            "stride": self.curve_stride,
            "workers": self.workers,
            "settle": self.settle,
        }
        if self.means is not None:
            data["means"] = list(self.means)
        else:
            data["generator"] = self.generator
        if self.out is not None:
            data["out"] = self.out
        data.update(self.parameters)
        return data

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "ExperimentConfig":
        """
        Build a config from a flat mapping.

        Raises:
            ConfigError: If a key is unknown or a value is malformed.
        """
        if not isinstance(data, Mapping):
            raise _fail("a config must be a mapping of keys to values")
        known = {f.name for f in fields(cls)} - {"params"}
        kwargs: Dict[str, Any] = {}
        params: Dict[str, Any] = {}
        for key, value in data.items():
            if key in PARAMETER_KEYS:
                params[key] = value
            elif key in known:
                kwargs[key] = value
            else:
                raise _fail(f"{key}: unknown key")
        if "means" in kwargs:
            means = kwargs["means"]
            if not isinstance(means, list) or not means or not all(
                isinstance(mu, (int, float)) and not isinstance(mu, bool) for mu in means
            ):
                raise _fail("means: expected a non-empty list of numbers")
            kwargs["means"] = tuple(float(mu) for mu in means)
            kwargs.setdefault("arms", len(means))
            if "generator" in kwargs:
                raise _fail("generator: cannot be combined with explicit means")
        for key in ("protocol", "generator", "out"):
            if key in kwargs and not isinstance(kwargs[key], str):
                raise _fail(f"{key}: expected a string, got {kwargs[key]!r}")
        for key in _INT_KEYS:
            if key in kwargs and kwargs[key] is not None:
                _as_int(key, kwargs[key])
        return cls(params=params, **kwargs)


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Read an experiment config from a YAML file.

    Args:
        path (Union[str, Path]): The file.

    Returns:
        ExperimentConfig: The validated config.

    Raises:
        ConfigError: If the YAML is malformed or a key is invalid.
        OSError: If the file cannot be read.
    """
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = yaml.safe_load(handle)
        except yaml.YAMLError as exc:
            raise _fail(f"{path}: not valid YAML ({exc})") from None
    logger.info(f"Loaded experiment config from {path}")
    return ExperimentConfig.from_mapping(data or {})
