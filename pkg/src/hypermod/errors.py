"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """A mathematical precondition of an operation is violated."""


class NotApplicableError(PreconditionError):
    """The requested classification does not apply to these parameters."""


class NoViolationError(ValueError):
    """No interlacing violation exists, so no divergence witness can be built."""


class NotFoundWithinBounds(RuntimeError):
    """A search completed without finding the requested object inside its bounds."""

    def __init__(self, message, bounds=None):
        super().__init__(message)
        self.bounds = bounds
