from typing import Optional


class CircleFFTError(Exception):
    """Base class for every error raised by circle_fft."""


class EmptySignalError(CircleFFTError, ValueError):
    pass


class NonFiniteValueError(CircleFFTError, ValueError):
    pass


class UnsupportedSizeError(CircleFFTError, ValueError):
    """Raised for N = 0 or, on radix-2 paths, N that is not a power of two."""

    def __init__(self, size: int, reason: str = "size must be a power of two"):
        self.size = size
        super().__init__(f"Unsupported size {size}: {reason}")


class SizeMismatchError(CircleFFTError, ValueError):
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Input has {actual} values but the plan is for N={expected}")


class InsufficientDataError(CircleFFTError, ValueError):
    pass


class LayoutError(CircleFFTError, ValueError):
    pass


class ConfigurationError(CircleFFTError, ValueError):
    pass


class SignalParseError(CircleFFTError, ValueError):
    """A signal file could not be parsed; `line` is 1-based when known."""

    def __init__(self, path: str, message: str, line: Optional[int] = None):
        self.path = path
        self.line = line
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {message}")


class RecurrenceViolation(CircleFFTError):
    """Measured counts broke the divide-and-conquer recurrence at level `size`."""

    def __init__(self, size: int, message: str):
        self.size = size
        super().__init__(f"N={size}: {message}")
