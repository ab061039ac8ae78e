import logging
from typing import Any, Optional

import numpy as np

from circle_fft.models import OpCount, Signal, Spectrum, to_signal, to_spectrum
from circle_fft.utils.constants import NAIVE_BLOCK_ENTRIES

from .numeric import twiddle_table

logger = logging.getLogger("circle_fft.transforms")


def direct_sum(values: np.ndarray, factors: np.ndarray, counter: Optional[OpCount] = None) -> np.ndarray:
    """
    out[k] = sum_n values[n] * factors[(n*k) mod N], evaluated without shortcuts.

    This is the bare kernel behind naive_dft and naive_idft; it takes a
    prepared complex128 vector and does no validation.

    Rows are processed in blocks so memory stays bounded while the work
    stays exactly N^2 products and N*(N-1) additions.
    """
    n = values.size
    idx = np.arange(n, dtype=np.int64)
    out = np.empty(n, dtype=np.complex128)
    rows_per_block = max(1, NAIVE_BLOCK_ENTRIES // n)

    for start in range(0, n, rows_per_block):
        ks = idx[start : start + rows_per_block]
        # exact integer exponent, reduced before indexing the table
        exponents = np.outer(ks, idx) % n
        products = factors[exponents] * values
        out[start : start + ks.size] = products.sum(axis=1)
        if counter is not None:
            counter.record(mults=ks.size * n, adds=ks.size * (n - 1))

    return out


def naive_dft(x: Any, counter: Optional[OpCount] = None) -> Spectrum:
    """
    Evaluate A_k = sum_n a_n e^{-2*pi*i*n*k/N} directly in O(N^2).

    This is the correctness oracle for the FFT and the quadratic baseline for
    cost accounting. Every product is performed and counted, including the
    ones by factors[0] = 1.

    Args:
        x: Signal (or array-like of samples) of any length N >= 1
        counter: Optional sink; receives exactly N^2 mults and N*(N-1) adds

    Returns:
        Spectrum of length N

    Raises:
        EmptySignalError: If x has no samples
    """
    x = to_signal(x)
    table = twiddle_table(x.n)
    return Spectrum.of(direct_sum(x.samples, table.factors, counter))


def naive_idft(spectrum: Any, counter: Optional[OpCount] = None) -> Signal:
    """
    Invert the DFT directly: a_n = (1/N) sum_k A_k conj(factors[(n*k) mod N]).

    Args:
        spectrum: Spectrum (or array-like of bins) of length N >= 1
        counter: Optional sink for the direct sum; the final 1/N scaling is not counted

    Returns:
        Signal of length N

    Raises:
        EmptySignalError: If there are no bins
    """
    spectrum = to_spectrum(spectrum)
    n = spectrum.n
    table = twiddle_table(n)
    values = direct_sum(spectrum.bins, np.conj(table.factors), counter) / n
    return Signal.of(values)
