"""Exception hierarchy shared by all modules."""


class TwoZeroError(Exception):
    pass


class ParameterError(TwoZeroError, ValueError):
    """Input violates a precondition (bad prime, divisibility, regime)."""


class WorkCapError(TwoZeroError):
    """Requested table or sweep exceeds the configured resource cap."""


class ExceptionalPointError(TwoZeroError, ValueError):
    """A rational map was evaluated on its exceptional locus."""


class InternalCheckError(TwoZeroError, AssertionError):
    """A consistency check that should never fail did fail."""
