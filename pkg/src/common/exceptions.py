class ExteriorAlgebraError(Exception):
    """Base class for every error raised by the library.

    ``exit_code`` is the status the command-line front end terminates with.
    """

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class MalformedInputError(ExteriorAlgebraError):
    """Input text or file that cannot be parsed into a domain value"""

    exit_code = 2


class DomainError(ExteriorAlgebraError, ValueError):
    """Arguments outside an operation's precondition"""

    exit_code = 2


class RangeError(DomainError):
    """Rank outside 0 <= r < count"""


class DimensionError(DomainError):
    """Ambient, shape or grade mismatch between operands"""

    exit_code = 3


class ComplexityRefusal(ExteriorAlgebraError):
    """Leibniz expansion requested beyond the configured size"""

    exit_code = 4


class PropertyViolation(ExteriorAlgebraError):
    """An algebraic law failed on a concrete counterexample"""

    exit_code = 1


class ScalarDivisionError(ExteriorAlgebraError, ZeroDivisionError):
    exit_code = 2
