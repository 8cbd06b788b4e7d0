class BanditAutomataError(Exception):
    """Base class for all bandit-automata exceptions."""

    pass


class StructureError(BanditAutomataError):
    """Raised when an automaton, bandit or agent is used outside its structure."""

    pass


class ParameterError(StructureError):
    """Raised when a protocol or generator parameter is out of range."""

    pass


class CallOrderError(StructureError):
    """Raised when an agent's choose/observe discipline is violated."""

    pass


class PfaFormatError(BanditAutomataError):
    """Raised when a PFA document is malformed or violates an invariant."""

    pass


class ConfigError(BanditAutomataError):
    """Raised when an experiment configuration field is invalid."""

    pass


class GenericityError(ConfigError):
    """Raised when a bandit is not generic but a generic one is required."""

    pass
