"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed graph input: bad edge, bad index, or unparseable text."""


class DisconnectedGraphError(Exception):
    """A connected graph was required but the input is disconnected."""
