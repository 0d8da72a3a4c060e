"""Exception types shared across the library."""


class SizeLimitError(ValueError):
    """The input exceeds a documented cap for exact computation."""


class NumericalFailureError(RuntimeError):
    """A numerical routine could not reach its accuracy target.

    Carries the best residual achieved, when one is known.
    """

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class InsufficientDataError(RuntimeError):
    """Not enough data to form the requested statistic."""
