class StreamCodingError(Exception):
    """Base error. Mirrors an HTTP error: a process exit code plus a detail message."""

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class UsageError(StreamCodingError, ValueError):
    exit_code = 2


class BudgetError(UsageError):
    """Corruption pattern exceeds the (1/4 - eps) budget."""


class FormatError(StreamCodingError, ValueError):
    exit_code = 3


class ConfigurationError(StreamCodingError, ValueError):
    exit_code = 4


class InfrastructureError(StreamCodingError, RuntimeError):
    exit_code = 5


class StreamUnderrunError(InfrastructureError):
    pass


class DomainError(UsageError, ArithmeticError):
    """Arithmetic outside an operation's domain, e.g. inverting zero."""
