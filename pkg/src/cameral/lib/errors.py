class CameralError(Exception):
    """
    Base class for every error raised by the verification toolkit.
    """

    exit_code: int = 1


class UsageError(CameralError):
    """
    Rejected input that the user can correct, e.g. an even field size.
    """

    exit_code: int = 2


class InvalidRootDatumError(UsageError):
    pass


class UnsupportedFamilyError(UsageError):
    pass


class InvalidCurveError(UsageError):
    pass


class NotFiniteTypeError(CameralError):
    pass


class BudgetExceededError(CameralError):
    pass


class NoModelError(CameralError):
    pass


class NotACocycleError(CameralError):
    pass


class ModuleMismatchError(CameralError):
    pass


class PreconditionError(CameralError):
    pass


class CurveMismatchError(CameralError):
    pass


class InternalConsistencyError(CameralError):
    """
    Raised when two computations that must agree do not. Indicates a bug.
    """

    pass
