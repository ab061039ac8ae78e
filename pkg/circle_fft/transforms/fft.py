import logging
from functools import lru_cache
from typing import Any, Optional, Tuple

import numpy as np

from circle_fft.models import FftPlan, OpCount, Signal, Spectrum, to_signal, to_spectrum
from circle_fft.utils.exceptions import SizeMismatchError, UnsupportedSizeError

from .numeric import log2_exact, twiddle_table

logger = logging.getLogger("circle_fft.transforms")


def butterfly(
    even: np.ndarray,
    odd: np.ndarray,
    w: np.ndarray,
    counter: Optional[OpCount] = None,
    out: Optional[Tuple[np.ndarray, np.ndarray]] = None,
    scratch: Optional[np.ndarray] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Recombine half-size results: (E + w*O, E - w*O).

    The product w*O is computed once and used twice; the second bin is the
    first one recycled by a subtraction. Arrays may be 1-D or blocks of rows,
    with w broadcast along the last axis.

    Args:
        even: Half-size transform of the even-index samples
        odd: Half-size transform of the odd-index samples
        w: Twiddle factors, one per column
        counter: Optional sink; records one mult and two adds per pair
        out: Optional (upper, lower) destinations; passing (even, odd)
            overwrites the inputs in place
        scratch: Optional buffer shaped like odd that receives w*O

    Returns:
        Tuple of (upper, lower) bins
    """
    rotated = np.multiply(w, odd, out=scratch)
    if counter is not None:
        counter.record(mults=rotated.size, adds=2 * rotated.size)
    if out is None:
        return even + rotated, even - rotated
    upper, lower = out
    # lower may alias odd and upper may alias even; w*O is already in rotated
    np.subtract(even, rotated, out=lower)
    np.add(even, rotated, out=upper)
    return upper, lower


def _bit_reversal(n: int) -> np.ndarray:
    # doubling construction: rev(2N) = [2*rev(N), 2*rev(N) + 1]
    rev = np.zeros(1, dtype=np.intp)
    while rev.size < n:
        rev = np.concatenate((2 * rev, 2 * rev + 1))
    rev.flags.writeable = False
    return rev


def _stage_twiddles(factors: np.ndarray, n: int) -> Tuple[np.ndarray, ...]:
    stages = []
    size = 2
    while size <= n:
        w = np.ascontiguousarray(factors[: n // 2 : n // size])
        w.flags.writeable = False
        stages.append(w)
        size *= 2
    return tuple(stages)


@lru_cache(maxsize=64)
def make_plan(n: int) -> FftPlan:
    """
    Precompute the twiddle table, per-pass twiddle slices and bit-reversal
    permutation for size N.

    Args:
        n: Transform size; must be a power of two

    Returns:
        Immutable FftPlan

    Raises:
        UnsupportedSizeError: If n is zero or not a power of two
    """
    if n < 1:
        raise UnsupportedSizeError(n, "size must be at least 1")
    log2_exact(n)
    table = twiddle_table(n)
    plan = FftPlan(
        order=n,
        twiddles=table,
        bit_reversal=_bit_reversal(n),
        stage_twiddles=_stage_twiddles(table.factors, n),
    )
    logger.debug(f"Built FFT plan for N={n} ({plan.levels} levels)")
    return plan


def _recurse(values: np.ndarray, factors: np.ndarray, stride: int, counter: Optional[OpCount]) -> np.ndarray:
    n = values.size
    if n == 1:
        return values.copy()
    half = n // 2
    even = _recurse(values[0::2], factors, 2 * stride, counter)
    odd = _recurse(values[1::2], factors, 2 * stride, counter)
    # e^{-2*pi*i*k/n} is entry k*stride of the order-N table
    w = factors[: half * stride : stride]
    upper, lower = butterfly(even, odd, w, counter)
    return np.concatenate((upper, lower))


def fft_recursive(x: Any, counter: Optional[OpCount] = None) -> Spectrum:
    """
    Radix-2 decimation-in-time FFT written as the even/odd recursion.

    Splits the samples by index parity, transforms each half, then combines
    bin k and bin k + N/2 with one butterfly. The base case is the 1-point
    DFT, which is the identity.

    Args:
        x: Signal (or array-like of samples) whose length is a power of two
        counter: Optional sink; receives (N/2)*log2(N) mults and N*log2(N) adds

    Returns:
        Spectrum equal to naive_dft(x) up to rounding

    Raises:
        UnsupportedSizeError: If the length is not a power of two
    """
    x = to_signal(x)
    log2_exact(x.n)
    factors = twiddle_table(x.n).factors
    return Spectrum.of(_recurse(x.samples, factors, 1, counter))


def fft_stages(buf: np.ndarray, plan: FftPlan, counter: Optional[OpCount] = None) -> np.ndarray:
    """
    Run the log2(N) butterfly passes over a bit-reversed buffer, in place.

    The last axis holds one signal of length plan.order; any leading axes are
    a batch transformed together. Pass s views each signal as rows of size
    2^(s+1) so a whole pass is one vectorised butterfly writing back into buf.

    Args:
        buf: Writeable complex128 array, already in bit-reversed order
        plan: Plan for the last-axis length
        counter: Optional sink; receives (N/2)*log2(N) mults and N*log2(N) adds per signal

    Returns:
        buf, now holding the transform(s)
    """
    n = plan.order
    lead = buf.shape[:-1]
    scratch = np.empty(buf.size // 2, dtype=np.complex128)
    size = 2
    for w in plan.stage_twiddles:
        half = size // 2
        blocks = buf.reshape(*lead, n // size, size)
        even, odd = blocks[..., :half], blocks[..., half:]
        butterfly(even, odd, w, counter, out=(even, odd), scratch=scratch.reshape(odd.shape))
        size *= 2
    return buf


def fft_batch(batch: np.ndarray, plan: FftPlan, counter: Optional[OpCount] = None) -> np.ndarray:
    """
    Iterative FFT of every row of a prepared complex128 array.

    No validation or model wrapping: this is the bare kernel the benchmark
    times, so per-call overhead is spread over the whole batch.

    Returns:
        New array of the same shape holding one spectrum per row
    """
    if batch.shape[-1] != plan.order:
        raise SizeMismatchError(plan.order, batch.shape[-1])
    # the one copy: the bit-reversed gather
    return fft_stages(batch[..., plan.bit_reversal], plan, counter)


def fft_iterative(x: Any, plan: Optional[FftPlan] = None, counter: Optional[OpCount] = None) -> Spectrum:
    """
    In-place iterative radix-2 FFT.

    Copies the input once in bit-reversed order, then runs log2(N) butterfly
    passes over that single buffer without further allocation.

    Args:
        x: Signal (or array-like of samples)
        plan: Plan for len(x); built (and cached) when omitted
        counter: Optional sink; receives (N/2)*log2(N) mults and N*log2(N) adds

    Returns:
        Spectrum matching fft_recursive(x)

    Raises:
        SizeMismatchError: If len(x) differs from plan.order
        UnsupportedSizeError: If no plan is given and len(x) is not a power of two
    """
    x = to_signal(x)
    if plan is None:
        plan = make_plan(x.n)
    elif x.n != plan.order:
        raise SizeMismatchError(plan.order, x.n)

    buf = fft_batch(x.samples, plan, counter)
    buf.flags.writeable = False
    return Spectrum.of(buf)


def fft(x: Any, counter: Optional[OpCount] = None) -> Spectrum:
    """Forward FFT on the iterative path with a cached plan."""
    return fft_iterative(x, None, counter)


def ifft(spectrum: Any, plan: Optional[FftPlan] = None, counter: Optional[OpCount] = None) -> Signal:
    """
    Inverse FFT via conjugation: a = conj(fft(conj(A))) / N.

    Args:
        spectrum: Spectrum (or array-like of bins)
        plan: Plan for len(spectrum); built when omitted
        counter: Optional sink for the forward pass

    Returns:
        Signal with ifft(fft(x)) == x up to rounding

    Raises:
        SizeMismatchError: If len(spectrum) differs from plan.order
    """
    spectrum = to_spectrum(spectrum)
    forward = fft_iterative(np.conj(spectrum.bins), plan, counter)
    return Signal.of(np.conj(forward.bins) / spectrum.n)
