"""Exception types shared across the package."""


class ResourceLimitError(Exception):
    """Raised when a computation would exceed a configured size budget."""
