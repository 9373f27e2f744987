"""Shared exception types for bound violations and failed exact cross-checks."""


class InfeasibleError(ValueError):
    """A requested computation exceeds a configured work or size bound.

    The message names the violated bound; retry with a larger explicit bound
    if the cost is acceptable.
    """


class ConsistencyError(RuntimeError):
    """An exact internal cross-check failed.

    Raised when independent engines disagree, a linear system has a nonzero
    residual, or a quantity that must be an integer is not.  Everything here
    is exact rational arithmetic, so this is always a bug, never noise.
    """
