"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was called outside its contract.

    Raised for mismatched primes or groups, malformed input files, shape
    mismatches, elements outside a required ball, and similar precondition
    failures.
    """


class ResourceLimitError(RuntimeError):
    """An enumeration exceeded its configured element cap."""
