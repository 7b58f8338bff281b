"""Exception hierarchy shared by the whole package."""


class RedkitError(Exception):
    """Base class for package errors."""


class ValidationError(RedkitError):
    """An instance or decomposition violates a structural invariant."""


class ResourceLimitError(RedkitError):
    """A solver refused to run because every strategy exceeds its budget."""


class ReductionError(RedkitError):
    """A reduction was applied to an instance it does not accept."""


class ConstructionError(RedkitError):
    """A constructive procedure failed its own validation step."""
