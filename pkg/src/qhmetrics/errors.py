"""Exception types shared across the package."""


class DomainError(ValueError):
    """A precondition on the mathematical domain of an operation was violated.

    The message names the violated precondition; the CLI maps this to exit
    code 2.
    """


class DimensionMismatchError(DomainError):
    """Operands live in spaces of different dimension."""


class ConvergenceError(RuntimeError):
    """An iterative routine failed to reach its target accuracy."""


class BudgetExceededError(RuntimeError):
    """A refinement loop hit its evaluation budget before reaching the
    requested tolerance.  ``best`` carries the best certified interval
    achieved so far."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
