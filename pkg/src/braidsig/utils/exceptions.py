"""Custom exceptions for braidsig."""


class BraidsigError(Exception):
    """Base exception for braidsig."""

    def __init__(self, message: str, error_code: str = "GENERIC_ERROR") -> None:
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class ValidationError(BraidsigError):
    """Raised when input validation fails."""

    def __init__(
        self,
        message: str,
        field: str | None = None,
        error_code: str = "VALIDATION_ERROR",
    ) -> None:
        self.field = field
        super().__init__(message, error_code)


class WordParseError(ValidationError):
    """Raised when braid word text cannot be parsed."""

    def __init__(self, message: str, token: str | None = None) -> None:
        self.token = token
        super().__init__(message, field="text", error_code="WORD_PARSE_ERROR")


class StrandMismatchError(ValidationError):
    """Raised when two braids on different strand counts are combined."""

    def __init__(self, left: int, right: int) -> None:
        self.left = left
        self.right = right
        super().__init__(
            f"Strand counts differ: {left} vs {right}",
            field="strands",
            error_code="STRAND_MISMATCH",
        )


class NotPositiveError(BraidsigError):
    """Raised when a positive braid word is required but an inverse letter occurs."""

    def __init__(self, message: str = "Positive braid word required") -> None:
        super().__init__(message, "NOT_POSITIVE")


class PreconditionError(BraidsigError):
    """Raised when an operation's contract is violated by otherwise valid input."""

    def __init__(self, message: str) -> None:
        super().__init__(message, "PRECONDITION_ERROR")


class ConfigurationError(BraidsigError):
    """Raised when configuration is invalid."""

    def __init__(self, message: str) -> None:
        super().__init__(message, "CONFIGURATION_ERROR")
