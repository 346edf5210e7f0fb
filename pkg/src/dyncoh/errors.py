"""Shared exception types."""


class ValidationError(ValueError):
    """An input violates a documented invariant; the message names it."""


class InternalCheckError(RuntimeError):
    """An internal consistency check failed.  Always a bug, never bad input."""
