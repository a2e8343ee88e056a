"""Exception hierarchy shared by every module of the package."""


class CapelliError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CapelliError, ValueError):
    """An argument lies outside the domain of the operation (zero input, constant polynomial, ...)."""


class RingMismatchError(CapelliError, TypeError):
    """Two operands live in different coefficient rings."""


class ExactDivisionError(CapelliError, ArithmeticError):
    """An exact division had a nonzero remainder."""


class PreconditionError(CapelliError, ValueError):
    """A mathematical precondition failed (reducible input, f(0) = 0, ...)."""


class OracleBudgetExceeded(CapelliError, RuntimeError):
    """A brute-force search hit its configured work limit before finishing."""


class ParseError(CapelliError, ValueError):
    """Malformed element or polynomial text.

    ``position`` is the 0-based character offset at which parsing failed.
    """

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}" if text else message)


class InternalError(CapelliError, AssertionError):
    """A consistency check inside the library failed; indicates a bug."""


class UnitCoefficientsError(PreconditionError):
    """Both the leading and the constant coefficient are units, so no finite prime bound exists."""
