"""Exception types shared across the package."""


class DomainError(ValueError, ArithmeticError):
    """Argument lies outside the supported domain of an operation."""


class PoleError(DomainError):
    """Argument sits on a pole of the gamma function."""


class RangeError(OverflowError):
    """Result is not representable in double precision.

    The log-domain value that would have been exponentiated is kept on
    ``log_value`` so callers can still report it.
    """

    def __init__(self, message, log_value=None):
        super().__init__(message)
        self.log_value = log_value


class PreconditionError(ValueError):
    """Inputs are well-typed but violate an operation's precondition."""
