"""Exception types shared across the package."""


class ContextlabError(Exception):
    """Base class for all package-specific errors."""


class IncompatibleOperands(ContextlabError, ValueError):
    """Two operators do not share the same site count or qudit dimension."""


class MatrixCapExceeded(ContextlabError, ValueError):
    """A dense realization would exceed the configured dimension cap."""


class ContractViolation(ContextlabError, ValueError):
    """An input violates a documented precondition."""


class UndefinedDistribution(ContextlabError, ValueError):
    """All conditional amplitudes vanish; the ABL distribution does not exist."""


class OperatorFormatError(ContextlabError, ValueError):
    """Malformed operator text, or a token not representable at this (n, d)."""


class MalformedConfiguration(ContextlabError, ValueError):
    """A magic configuration fails a structural requirement."""
