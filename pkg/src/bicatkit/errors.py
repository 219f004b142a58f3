"""Exception types shared across the package.

Structural problems (dangling ids, non-composable endpoints, malformed
tables) raise eagerly; law violations never raise — they are collected in
Reports by the check_* functions.
"""


class BicatError(Exception):
    """Base class for all bicatkit errors."""


class StructureError(BicatError):
    """Malformed data: dangling ids, wrong endpoints, partial tables."""


class ParseError(BicatError):
    """Unreadable term string or structure file."""


class BudgetExceeded(BicatError):
    """An enumeration would exceed the candidate budget.

    Carries the predicted candidate count so callers can report it.
    """

    def __init__(self, predicted: int, budget: int, what: str = "enumeration"):
        self.predicted = predicted
        self.budget = budget
        self.what = what
        super().__init__(
            f"{what} needs {predicted} candidates, budget is {budget}"
        )


class NotCanonicalError(BicatError):
    """A term contains generator 2-cells where a canonical cell is required."""


class NotParallelError(BicatError):
    """Two 2-cell terms do not share source and target 1-cell terms."""


class AssignmentError(BicatError):
    """A generator assignment does not respect endpoints."""
