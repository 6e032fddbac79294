"""Exception hierarchy shared by all grnorms modules."""


class GRError(Exception):
    """Base class for every error raised by this package."""


class DomainError(GRError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class ConvergenceError(GRError, RuntimeError):
    """An iterative solver failed to converge or lost its bracket."""


class ConsistencyError(GRError):
    """Two routes to the same quantity disagree beyond tolerance."""


class BudgetExceededError(GRError, RuntimeError):
    """Quadrature could not reach the requested tolerance within its budget."""


class LevelCrossingError(GRError, RuntimeError):
    """The level set f(x) = f_I could not be bracketed reliably."""
