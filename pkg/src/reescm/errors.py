"""Error taxonomy shared by the whole toolkit.

Every failure a caller can act on is a named exception class.  The service
and CLI map these onto exit codes / HTTP statuses, so new error conditions
should subclass one of the three roots below rather than raising bare
ValueError.
"""


class DomainError(ValueError):
    """A mathematically invalid request (wrong ring, inhomogeneous input, ...)."""

    kind = "domain-error"


class RingMismatchError(DomainError):
    kind = "ring-mismatch"


class InhomogeneousError(DomainError):
    """Input polynomial mixes two total degrees."""

    kind = "inhomogeneous"

    def __init__(self, degree_a, degree_b, message=None):
        self.witness = (degree_a, degree_b)
        super().__init__(message or f"inhomogeneous: mixes degrees {degree_a} and {degree_b}")


class ZeroIdealError(DomainError):
    kind = "zero-ideal"


class UnitIdealError(DomainError):
    kind = "unit-ideal"


class DegenerateRingError(DomainError):
    """The presented ring is the zero ring (1 lies in the relation ideal)."""

    kind = "degenerate-ring"


class DimensionZeroError(DomainError):
    kind = "dimension-zero"


class LambdaRangeError(DomainError):
    kind = "lambda-range"


class NotCohenMacaulayError(DomainError):
    """Raised when an operation requires a Cohen-Macaulay input."""

    kind = "not-cohen-macaulay"


class VariableLimitError(DomainError):
    kind = "variable-limit"


class ResourceLimitError(RuntimeError):
    """A configured resource cap was exceeded; the partial answer is discarded."""

    kind = "resource-limit"


class SessionParseError(ValueError):
    """Session text could not be parsed; carries 1-based line/column."""

    kind = "parse-error"

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
        self.bare_message = message
