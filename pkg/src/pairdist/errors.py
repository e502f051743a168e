"""Exception hierarchy shared by the library and the command line."""


class PairDistError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 2


class InvalidFieldError(PairDistError, ValueError):
    """The modulus is not an odd prime, or a field-level precondition fails."""


class FieldMismatchError(PairDistError, TypeError):
    """Two elements (or polynomials) from different prime fields were combined."""


class InvalidCodeError(PairDistError, ValueError):
    """A code descriptor violates a construction precondition."""


class UnsupportedCodeError(PairDistError, ValueError):
    """The code is valid but outside what the distance engine handles (d_H = n)."""


class SearchBudgetExceeded(PairDistError, RuntimeError):
    """The exact search would exceed its configured budget."""

    exit_code = 3


class OracleUnavailable(PairDistError, RuntimeError):
    """The brute-force oracle does not fit its cap for this instance."""

    exit_code = 3


class InvariantBreach(PairDistError, AssertionError):
    """An internal consistency check failed; this indicates an engine bug."""

    exit_code = 4
