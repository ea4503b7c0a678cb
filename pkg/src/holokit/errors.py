"""Exception types shared across holokit."""


class HolokitError(Exception):
    pass


class InputError(HolokitError, ValueError):
    """Malformed or inconsistent user input (bad labels, broken axioms, ...)."""


class InvariantError(HolokitError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ResourceError(HolokitError):
    """A computation would exceed the configured word-space guard."""


class NotChordalError(HolokitError):
    """Raised by the elimination tower when no simplicial vertex remains."""

    def __init__(self, message, remaining=()):
        super().__init__(message)
        self.remaining = tuple(remaining)
