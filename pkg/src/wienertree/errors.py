"""Exception types shared by the library and the CLI."""


class InvalidInput(ValueError):
    """Input violates an operation's precondition."""


class LimitExceeded(RuntimeError):
    """Exhaustive enumeration requested above its configured size cap."""


class Infeasible(Exception):
    """No candidate satisfies the requested constraint."""


class InternalError(RuntimeError):
    """Internal state is inconsistent (e.g. corrupted DP tables)."""
