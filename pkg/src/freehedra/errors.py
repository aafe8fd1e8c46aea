"""Shared exception types."""


class LocatorError(ValueError):
    """A mid-branch space locator does not point at a gap of the triple."""


class EncodingError(ValueError):
    """Malformed serialized input (vertex word or JSON record)."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration or truncation bound was exceeded."""
