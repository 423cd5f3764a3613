"""Exception types shared across the package."""


class DesignCodesError(Exception):
    """Base class for all package errors."""


class FieldMismatch(DesignCodesError):
    pass


class DivisionByZero(DesignCodesError):
    pass


class NotASubfield(DesignCodesError):
    pass


class OutOfRange(DesignCodesError):
    pass


class BadParams(DesignCodesError):
    pass


class EmptyInput(DesignCodesError):
    pass


class RaggedRows(DesignCodesError):
    pass


class ZeroCode(DesignCodesError):
    pass


class NoSuchWeight(DesignCodesError):
    pass


class NotATDesign(DesignCodesError):
    pass


class FullSpace(DesignCodesError):
    pass


class TNotLessThanD(DesignCodesError):
    pass


class WeightEnumeratorMismatch(DesignCodesError):
    pass


class BudgetExceeded(DesignCodesError):
    """Raised when an exact computation would exceed the word budget.

    min_work_estimate is the number of codewords the cheapest exact
    route would have to enumerate.
    """

    def __init__(self, min_work_estimate):
        self.min_work_estimate = int(min_work_estimate)
        super().__init__(f"exact computation needs {self.min_work_estimate} codewords")


class Infeasible(DesignCodesError):
    """Raised when a brute-force design check would exceed its check budget."""

    def __init__(self, checks_needed):
        self.checks_needed = int(checks_needed)
        super().__init__(f"design check needs {self.checks_needed} subset tests")
