"""Exception hierarchy shared by every module."""


class RainbowError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(RainbowError, ValueError):
    """An argument lies outside the operation's domain."""


class GraphFormatError(RainbowError, ValueError):
    """Serialized input does not match the canonical format."""


class BindingError(RainbowError, ValueError):
    """A coloring was used with a graph it does not belong to."""


class PreconditionError(RainbowError, ValueError):
    """Input is well formed but violates an operation's precondition."""


class SizeLimitError(RainbowError):
    """The exact solver refused a graph above its feasibility bound."""


class BoundTooSmallError(RainbowError):
    """No coloring was found with at most ``k_max`` colors."""


class AuditInconsistencyError(RainbowError, RuntimeError):
    """The proof replay produced a pair that is not actually refuted."""


class ArithmeticInconsistencyError(RainbowError, AssertionError):
    """A pigeonhole margin failed to hold."""
