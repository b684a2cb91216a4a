"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


class PolynomialParseError(ToolkitError):
    """Malformed polynomial or document text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InputError(ToolkitError):
    """Malformed job input (ring/ideal document, flags, combination files)."""


class BudgetExceededError(ToolkitError):
    """A Groebner computation ran past its configured pair budget.

    Raised instead of returning a possibly-wrong truncated answer.
    """

    def __init__(self, message: str, pairs_processed: int = 0):
        super().__init__(message)
        self.pairs_processed = pairs_processed


class HomogeneityError(ToolkitError):
    """An operation that needs homogeneous input received an inhomogeneous one."""


class NotMPrimaryError(ToolkitError):
    """A zero-dimensional (m-primary) ideal was required."""


class DimensionError(ToolkitError):
    """The quotient dimension does not match the operation's precondition."""


class ElementSelectionError(ToolkitError):
    """No splitting element passed validation within the retry/degree policy."""

    def __init__(self, message: str, failing_q: int | None = None, attempts: list | None = None):
        super().__init__(message)
        self.failing_q = failing_q
        self.attempts = attempts or []


class CertificateError(ToolkitError):
    """An exact identity that must hold for a certified result failed at some q."""


class InternalError(ToolkitError):
    """An internal invariant was violated (indicates a bug, not bad input)."""
