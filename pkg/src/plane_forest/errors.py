"""Exception types shared across the library."""


class PlaneForestError(Exception):
    """Base class for all errors raised by this package."""


class MalformedCode(PlaneForestError, ValueError):
    """A parenthesis code is unbalanced or contains foreign characters."""


class LimitExceeded(PlaneForestError):
    """A requested size is beyond the configured safety cap."""


class HasCycle(PlaneForestError):
    """A candidate separatrix graph contains a cycle."""


class Disconnected(PlaneForestError):
    """A candidate separatrix graph is not connected."""
