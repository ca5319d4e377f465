"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class SingularParameterError(DomainError):
    """A parameter value makes a closed form singular (e.g. c_w = 1)."""


class ConvergenceError(RuntimeError):
    """An iterative solver failed to converge.

    Carries the last iterate and residuals so the failing case can be
    reproduced and inspected.
    """

    def __init__(self, message, last_iterate=None, residuals=None, iterations=None):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.residuals = residuals
        self.iterations = iterations


class NonConcaveObjectiveError(RuntimeError):
    """A first-order condition has several sign changes where one was assumed.

    ``roots`` lists every root found so the caller can see the full picture.
    """

    def __init__(self, message, roots=()):
        super().__init__(message)
        self.roots = tuple(roots)


class InfeasibleScenarioError(RuntimeError):
    """The scenario violates a feasibility requirement of the operation."""


class AssumptionViolationError(RuntimeError):
    """A sign or positivity assumption of a closed form does not hold."""


class FeasibilityWarning(UserWarning):
    """A result was computed outside the regime its formulas assume."""
