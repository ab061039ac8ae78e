import logging
import math
from functools import lru_cache

import numpy as np

from circle_fft.models import TwiddleTable
from circle_fft.utils.exceptions import UnsupportedSizeError

logger = logging.getLogger("circle_fft.transforms")


def complex_add(a: complex, b: complex) -> complex:
    """Componentwise sum of two complex values."""
    return complex(a.real + b.real, a.imag + b.imag)


def complex_mul(a: complex, b: complex) -> complex:
    """Product (a.re*b.re - a.im*b.im, a.re*b.im + a.im*b.re)."""
    return complex(a.real * b.real - a.imag * b.imag, a.real * b.imag + a.imag * b.real)


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def log2_exact(n: int) -> int:
    """
    Integer log2 of a power of two.

    Raises:
        UnsupportedSizeError: If n is not a positive power of two
    """
    if not is_power_of_two(n):
        raise UnsupportedSizeError(n)
    return n.bit_length() - 1


@lru_cache(maxsize=64)
def twiddle_table(n: int) -> TwiddleTable:
    """
    Build the table of N-th roots of unity used by every transform.

    Each factor is evaluated from its own angle with cos/sin rather than by
    repeated multiplication, so errors do not accumulate along the table.

    Args:
        n: Order of the table, N >= 1

    Returns:
        TwiddleTable with factors[j] = (cos(-2*pi*j/N), sin(-2*pi*j/N))

    Raises:
        UnsupportedSizeError: If n < 1
    """
    if n < 1:
        raise UnsupportedSizeError(n, "order must be at least 1")

    angles = -2.0 * math.pi * np.arange(n, dtype=np.float64) / n
    factors = np.cos(angles) + 1j * np.sin(angles)
    factors[0] = 1.0 + 0.0j
    if n % 2 == 0:
        # exact sign flip between the two halves
        factors[n // 2 :] = -factors[: n // 2]
    factors.flags.writeable = False
    logger.debug(f"Built twiddle table of order {n}")
    return TwiddleTable(order=n, factors=factors)
