"""Exception types raised by the calculators.

Everything derives from :class:`LegcalcError`, which is a ``ValueError`` so
callers that only care about "bad input" can catch that.
"""


class LegcalcError(ValueError):
    pass


class InvalidParameters(LegcalcError):
    pass


class UndefinedMediant(LegcalcError):
    pass


class BudgetExceeded(LegcalcError):
    pass


class SizeMismatch(LegcalcError):
    pass


class UnrealizableInput(LegcalcError):
    def __init__(self, message, which=None):
        super().__init__(message)
        self.which = which


class MalformedPermutation(LegcalcError):
    pass


class SizeGuardExceeded(LegcalcError):
    pass


class RegimeMismatch(LegcalcError):
    pass


class AssumptionViolated(LegcalcError):
    pass


class FrontError(LegcalcError):
    """Ill-formed event word or a request that needs a closed component."""


class SiteError(FrontError):
    pass


class TbMismatch(FrontError):
    pass
