"""Shared exception types."""


class SizeCapError(RuntimeError):
    """A dense-operator request exceeded the configured size cap."""


class ConsistencyError(RuntimeError):
    """An internal invariant that should be unreachable was violated."""
