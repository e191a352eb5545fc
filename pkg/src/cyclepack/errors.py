"""Exception types shared across the package.

Every error class carries the CLI exit code of its category: 1 for a
definite negative answer, 2 for malformed input, 3 for an unmet
precondition, 4 for an exhausted search or retry budget.
"""


class CyclePackError(Exception):
    exit_code = 2


class BadInput(CyclePackError):
    """Malformed parameters, specs, or files."""

    exit_code = 2


class BadResidue(BadInput):
    pass


class BadLength(BadInput):
    pass


class BadParameters(BadInput):
    pass


class GraphFormatError(BadInput):
    pass


class PreconditionError(CyclePackError):
    """The input graph does not meet the operation's stated hypothesis."""

    exit_code = 3


class DegreeTooLow(PreconditionError):
    pass


class NotTriangleFree(PreconditionError):
    pass


class PreconditionUnmet(PreconditionError):
    pass


class NotStrong(PreconditionError):
    pass


class TooSmall(PreconditionError):
    pass


class NotRegular(PreconditionError):
    pass


class NotOptimal(PreconditionError):
    pass


class InvalidSchema(PreconditionError):
    pass


class InvalidCertificate(CyclePackError):
    exit_code = 1


class NotFound(CyclePackError):
    """Definite negative answer.

    exhaustive is True when the underlying search completed (the object
    provably does not exist) rather than being cut off by a budget.
    """

    exit_code = 1

    def __init__(self, message: str = "", *, exhaustive: bool = False, explored: int = 0):
        super().__init__(message)
        self.exhaustive = exhaustive
        self.explored = explored


class BudgetError(CyclePackError):
    exit_code = 4


class SearchExhausted(BudgetError):
    def __init__(self, message: str = "", *, best_potential: int | None = None, completed: bool = False):
        super().__init__(message)
        self.best_potential = best_potential
        self.completed = completed


class ResourceBudgetExceeded(BudgetError):
    def __init__(self, message: str = "", *, explored: int = 0):
        super().__init__(message)
        self.explored = explored


class RetriesExhausted(BudgetError):
    def __init__(self, message: str = "", *, failures: list | None = None):
        super().__init__(message)
        self.failures = failures or []


class GenerationFailed(BudgetError):
    pass
