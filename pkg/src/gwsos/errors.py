"""Exception types shared across the package."""


class GwsosError(Exception):
    """Base class for all errors raised by this package."""


class CapacityError(GwsosError):
    """A combinatorial size (basis, block count, integer range) exceeds a configured limit."""


class ParseError(GwsosError):
    """A data file could not be parsed; carries the 1-based row/column location."""

    def __init__(self, message, path=None, row=None, col=None):
        loc = ""
        if path is not None:
            loc += f" in {path}"
        if row is not None:
            loc += f" at row {row}"
        if col is not None:
            loc += f", column {col}"
        super().__init__(message + loc)
        self.path = path
        self.row = row
        self.col = col


class OutOfBasisError(GwsosError, KeyError):
    """A monomial was requested that lies outside the truncated basis."""


class FeasibilityError(GwsosError):
    """A moment vector violates the feasibility conditions required by an operation."""


class ExtractionError(GwsosError):
    """The first-order moments are too inaccurate to yield a valid coupling."""


class SandwichError(GwsosError):
    """A certified lower bound exceeds a feasible upper bound: builder or solver bug."""


class TriangleViolationError(GwsosError):
    """The triangle inequality check failed beyond solver tolerance."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
