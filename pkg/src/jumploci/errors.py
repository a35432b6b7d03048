"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent user input."""


class ResourceBoundError(RuntimeError):
    """A configured size bound would be exceeded."""


class SupportBoundError(ResourceBoundError):
    """A polynomial support is larger than the partition enumerator allows."""
