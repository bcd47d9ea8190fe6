"""Shared exception types."""


class GuardExceeded(RuntimeError):
    """A desk-scale guard was hit; the message names the override to use."""


class VoidComplexError(ValueError):
    """Operation is undefined for the void complex (the one with no faces)."""
