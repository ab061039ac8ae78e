import logging
from typing import Callable, Dict, Optional

import numpy as np

from circle_fft.models import Algorithm, OpCount, RecurrenceLevel, RecurrenceReport, Spectrum
from circle_fft.transforms import fft_iterative, fft_recursive, log2_exact, naive_dft
from circle_fft.utils.config import make_rng, random_signal
from circle_fft.utils.exceptions import RecurrenceViolation, UnsupportedSizeError

logger = logging.getLogger("circle_fft.cost")

Transform = Callable[[np.ndarray, Optional[OpCount]], Spectrum]

TRANSFORMS: Dict[Algorithm, Transform] = {
    Algorithm.NAIVE: naive_dft,
    Algorithm.FFT_RECURSIVE: fft_recursive,
    Algorithm.FFT_ITERATIVE: lambda x, counter=None: fft_iterative(x, None, counter),
}


def expected_counts(algorithm: Algorithm, n: int) -> OpCount:
    """
    Closed-form operation counts.

    naive -> (N^2, N*(N-1)); either FFT -> ((N/2)*log2(N), N*log2(N)).

    Raises:
        UnsupportedSizeError: If n < 1, or n is not a power of two for an FFT
    """
    algorithm = Algorithm(algorithm)
    if n < 1:
        raise UnsupportedSizeError(n, "size must be at least 1")
    if algorithm is Algorithm.NAIVE:
        return OpCount(mults=n * n, adds=n * (n - 1))
    levels = log2_exact(n)
    return OpCount(mults=(n // 2) * levels, adds=n * levels)


def measure_counts(
    algorithm: Algorithm,
    n: int,
    rng: Optional[np.random.Generator] = None,
    transform: Optional[Transform] = None,
) -> OpCount:
    """
    Run one instrumented transform on random data and return what it recorded.

    Args:
        algorithm: Which transform to run (ignored when `transform` is given)
        n: Input length
        rng: Source of the random input; counts must not depend on it
        transform: Override for the transform under test

    Returns:
        The OpCount recorded during the run
    """
    rng = rng if rng is not None else make_rng()
    run = transform if transform is not None else TRANSFORMS[Algorithm(algorithm)]
    counter = OpCount()
    run(random_signal(n, rng), counter)
    return counter


def verify_recurrence(
    max_n: int,
    transform: Optional[Transform] = None,
    rng: Optional[np.random.Generator] = None,
    strict: bool = False,
) -> RecurrenceReport:
    """
    Check the divide-and-conquer cost recurrence on measured counts.

    For every power of two 2 <= N <= max_n this checks, exactly:
    M(N) = 2*M(N/2) + N/2 and A(N) = 2*A(N/2) + N for the FFT under test,
    measured == closed form for both FFT variants, and naive mults at N
    equal four times naive mults at N/2 (two half-size problems cost half).

    Args:
        max_n: Largest level; a power of two >= 2
        transform: FFT under test, default fft_recursive; the iterative
            variant is always measured alongside it
        rng: Source of the random inputs
        strict: Raise on the first failing level instead of only reporting it

    Returns:
        RecurrenceReport with one row per level

    Raises:
        UnsupportedSizeError: If max_n is not a power of two >= 2
        RecurrenceViolation: If strict and a level fails
    """
    top = log2_exact(max_n)
    if top < 1:
        raise UnsupportedSizeError(max_n, "recurrence needs N >= 2")

    rng = rng if rng is not None else make_rng()
    under_test = transform if transform is not None else TRANSFORMS[Algorithm.FFT_RECURSIVE]

    previous = measure_counts(Algorithm.FFT_RECURSIVE, 1, rng, under_test)
    previous_naive = measure_counts(Algorithm.NAIVE, 1, rng)
    report = RecurrenceReport(max_n=max_n)

    for level in range(1, top + 1):
        n = 1 << level
        measured = measure_counts(Algorithm.FFT_RECURSIVE, n, rng, under_test)
        iterative = measure_counts(Algorithm.FFT_ITERATIVE, n, rng)
        naive = measure_counts(Algorithm.NAIVE, n, rng)
        expected = expected_counts(Algorithm.FFT_RECURSIVE, n)

        problems = []
        if measured.mults != 2 * previous.mults + n // 2:
            problems.append(f"M(N)={measured.mults} != 2*{previous.mults} + {n // 2}")
        if measured.adds != 2 * previous.adds + n:
            problems.append(f"A(N)={measured.adds} != 2*{previous.adds} + {n}")
        if measured != expected:
            problems.append(f"measured {measured.mults}/{measured.adds} != expected {expected.mults}/{expected.adds}")
        if iterative != expected:
            problems.append(f"iterative {iterative.mults}/{iterative.adds} != expected {expected.mults}/{expected.adds}")
        if naive.mults != 4 * previous_naive.mults:
            problems.append(f"naive {naive.mults} != 4*{previous_naive.mults}")
        if naive != expected_counts(Algorithm.NAIVE, n):
            problems.append(f"naive {naive.mults}/{naive.adds} != expected")

        row = RecurrenceLevel(
            n=n,
            mults=measured.mults,
            adds=measured.adds,
            expected_mults=expected.mults,
            expected_adds=expected.adds,
            naive_mults=naive.mults,
            touches=n + n * level,
            ok=not problems,
            message="; ".join(problems) or None,
        )
        report.levels.append(row)

        if problems:
            logger.error(f"Recurrence fails at N={n}: {row.message}")
            if strict:
                raise RecurrenceViolation(n, row.message or "")
        else:
            logger.debug(f"Recurrence holds at N={n}: M={measured.mults} A={measured.adds}")

        previous, previous_naive = measured, naive

    return report
