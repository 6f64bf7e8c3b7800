"""Shared exception types."""


class DomainError(ValueError):
    """A value or argument violates a documented precondition.

    Raised by the core analysis functions; the CLI maps it to exit code 3
    and the HTTP service to a 422 response.
    """
