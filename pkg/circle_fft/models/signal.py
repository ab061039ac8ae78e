from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, field_validator

from circle_fft.utils.exceptions import EmptySignalError, NonFiniteValueError


def as_complex_buffer(values: Any) -> NDArray[np.complex128]:
    """
    Coerce numbers, complex values or (re, im) pairs to a read-only complex128 vector.

    Read-only complex128 vectors are taken as they are, without a copy.

    Args:
        values: Any array-like; an (N, 2) real array is read as N (re, im) pairs

    Returns:
        A one-dimensional, non-writeable complex128 array

    Raises:
        EmptySignalError: If there are no values
        NonFiniteValueError: If any value is NaN or infinite
    """
    if (
        isinstance(values, np.ndarray)
        and values.dtype == np.complex128
        and values.ndim == 1
        and not values.flags.writeable
    ):
        arr = values
    else:
        arr = np.asarray(values)
        if arr.ndim == 2 and arr.shape[1] == 2 and not np.iscomplexobj(arr):
            arr = arr[:, 0] + 1j * arr[:, 1]
        arr = np.array(arr, dtype=np.complex128, copy=True).reshape(-1)

    if arr.size == 0:
        raise EmptySignalError("A signal needs at least one sample")
    finite = np.isfinite(arr)
    if not finite.all():
        bad = int(np.flatnonzero(~finite)[0])
        raise NonFiniteValueError(f"Value at index {bad} is not finite: {arr[bad]}")
    arr.flags.writeable = False
    return arr


class _ComplexSequence(BaseModel):
    """Ordered, non-empty sequence of finite complex values"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def coerce_values(cls, v: Any) -> NDArray[np.complex128]:
        return as_complex_buffer(v)

    def __len__(self) -> int:
        return int(self.values.size)

    def __getitem__(self, index: int) -> complex:
        return complex(self.values[index])

    @property
    def n(self) -> int:
        return len(self)

    def to_pairs(self) -> list[list[float]]:
        return [[float(v.real), float(v.imag)] for v in self.values]


class Signal(_ComplexSequence):
    """Time-domain samples a_0..a_{N-1}"""

    @property
    def samples(self) -> NDArray[np.complex128]:
        return self.values

    @classmethod
    def of(cls, values: Any) -> "Signal":
        # validate up front so callers see the domain error, not a ValidationError
        return cls(values=as_complex_buffer(values))


class Spectrum(_ComplexSequence):
    """Frequency bins A_0..A_{N-1}"""

    @property
    def bins(self) -> NDArray[np.complex128]:
        return self.values

    @classmethod
    def of(cls, values: Any) -> "Spectrum":
        return cls(values=as_complex_buffer(values))


class TwiddleTable(BaseModel):
    """Roots of unity factors[j] = e^{-2*pi*i*j/N} for one order N"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    order: int
    factors: np.ndarray

    def __len__(self) -> int:
        return self.order

    def __getitem__(self, j: int) -> complex:
        return complex(self.factors[j % self.order])


def to_signal(x: Any) -> Signal:
    return x if isinstance(x, Signal) else Signal.of(x)


def to_spectrum(x: Any) -> Spectrum:
    return x if isinstance(x, Spectrum) else Spectrum.of(x)
