"""Exception types raised across shiftlab."""


class ShiftLabError(Exception):
    """Base class for every error raised by this package."""


class AmbientMismatchError(ShiftLabError, ValueError):
    """Monomials or ideals live in polynomial rings with different variable counts."""


class UndefinedInputError(ShiftLabError, ValueError):
    """The operation is not defined for this input (zero ideal, unit ideal, ...)."""


class ExponentOverflowError(ShiftLabError, OverflowError):
    pass


class ResourceError(ShiftLabError, RuntimeError):
    """A configured size cap was exceeded."""


class ContractViolation(ShiftLabError, ValueError):
    pass


class ParseError(ShiftLabError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
