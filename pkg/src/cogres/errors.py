"""Exception types shared across the package.

The split mirrors the CLI exit codes: validation problems (bad inputs,
malformed configs) exit 1, numerical failures (open circuits, singular
networks) exit 2.
"""


class CogresError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CogresError, ValueError):
    """An input violates a documented invariant or precondition."""


class ConfigError(ValidationError):
    """A config file is missing, unparseable, or fails schema validation."""


class OpenCircuitError(CogresError):
    """No conduction path exists (open ACF joint, disconnected terminals)."""


class SingularNetworkError(CogresError):
    """The nodal system is singular after grounding (malformed network)."""
