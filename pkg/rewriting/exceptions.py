class NoMatch(ValueError):
    """The rule's left-hand side does not occur at the given position."""


class FuelExhausted(RuntimeError):
    """
    Raised when a bounded computation runs out of steps. ``partial`` holds
    whatever was built so far (a path, a completion result, ...).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class NotCertified(RuntimeError):
    """A precondition (termination, confluence) could not be certified."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
