"""Exception types shared across the toolkit."""


class InputDataError(ValueError):
    """A user-supplied file or configuration is malformed or inconsistent."""


class TruncationError(ValueError):
    """A computation needs more of the spectrum than is available."""


class NumericalError(RuntimeError):
    """An iterative numerical procedure failed to reach its tolerance."""
