"""Shared exception types."""


class ConsistencyError(RuntimeError):
    """A cross-checked identity failed at runtime.

    Raised when two independently computed quantities that must agree
    (generator/socle counts, Euler-style triple counts, integrality of
    the recurrence steps) do not. Always a bug signal, never an input
    error.
    """
