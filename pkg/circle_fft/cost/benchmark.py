import logging
import math
import time
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from circle_fft.models import Algorithm, BenchRecord, CostModelFit, OpCount, Signal
from circle_fft.transforms import (
    direct_sum,
    fft_batch,
    fft_iterative,
    fft_recursive,
    is_power_of_two,
    make_plan,
    naive_dft,
    twiddle_table,
)
from circle_fft.utils.config import make_rng, random_signal
from circle_fft.utils.constants import BENCH_BATCH_ELEMENTS, DEFAULT_WARMUP, MIN_FIT_SIZES, MIN_REPEATS
from circle_fft.utils.exceptions import ConfigurationError, InsufficientDataError

logger = logging.getLogger("circle_fft.cost")


def batch_size(algorithm: Algorithm, n: int) -> int:
    """Signals per timed call: the iterative kernel runs a batch of BENCH_BATCH_ELEMENTS samples."""
    if algorithm is Algorithm.FFT_ITERATIVE:
        return max(1, BENCH_BATCH_ELEMENTS // n)
    return 1


def _timed_kernel(algorithm: Algorithm, n: int, rng: np.random.Generator) -> Tuple[Callable[[], object], int]:
    # inputs, tables and plans are prepared here, outside the timed region
    batch = batch_size(algorithm, n)
    samples = random_signal(n * batch, rng)
    if algorithm is Algorithm.NAIVE:
        factors = twiddle_table(n).factors
        return lambda: direct_sum(samples, factors), batch
    if algorithm is Algorithm.FFT_RECURSIVE:
        signal = Signal.of(samples)
        return lambda: fft_recursive(signal), batch
    plan = make_plan(n)
    rows = samples.reshape(batch, n)
    return lambda: fft_batch(rows, plan), batch


def _count(algorithm: Algorithm, n: int, rng: np.random.Generator) -> OpCount:
    counter = OpCount()
    x = random_signal(n, rng)
    if algorithm is Algorithm.NAIVE:
        naive_dft(x, counter)
    elif algorithm is Algorithm.FFT_RECURSIVE:
        fft_recursive(x, counter)
    else:
        fft_iterative(x, make_plan(n), counter)
    return counter


def time_transform(algorithm: Algorithm, n: int, repeats: int, warmup: int, rng: np.random.Generator) -> BenchRecord:
    """
    Median wall time of one transform at one size, over `repeats` timed calls.

    Each call runs the bare kernel on prepared complex128 input. The
    iterative FFT transforms a batch of signals per call and the recorded
    time is per signal. Warm-up calls are discarded.
    The operation counts come from a separate instrumented run of the
    public transform on a single signal.
    """
    algorithm = Algorithm(algorithm)
    run, per_call = _timed_kernel(algorithm, n, rng)

    for _ in range(warmup):
        run()

    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        run()
        times.append((time.perf_counter() - start) / per_call)

    counter = _count(algorithm, n, rng)

    median = float(np.median(times))
    logger.debug(f"{algorithm.value} N={n}: median {median:.3e}s over {repeats} runs of {per_call} signal(s)")
    return BenchRecord(
        n=n,
        algorithm=algorithm,
        repeats=repeats,
        # perf_counter can tick coarser than a tiny transform
        wall_time=max(median, 1e-9),
        counts=counter,
    )


def run_benchmark(
    sizes: Sequence[int],
    algorithms: Iterable[Algorithm],
    repeats: int = MIN_REPEATS,
    warmup: int = DEFAULT_WARMUP,
    rng: Optional[np.random.Generator] = None,
) -> List[BenchRecord]:
    """
    Time every (algorithm, size) combination, one transform at a time.

    Args:
        sizes: Input lengths, ascending
        algorithms: Transforms to time
        repeats: Timed runs per combination, at least 5
        warmup: Discarded runs before timing, at least 1
        rng: Source of the random inputs

    Returns:
        One BenchRecord per supported combination, grouped by algorithm

    Raises:
        ConfigurationError: If repeats < 5, warmup < 1, or sizes are not ascending
    """
    if repeats < MIN_REPEATS:
        raise ConfigurationError(f"repeats must be at least {MIN_REPEATS}, got {repeats}")
    if warmup < 1:
        raise ConfigurationError(f"at least one warm-up run is required, got {warmup}")
    if list(sizes) != sorted(sizes) or any(n < 1 for n in sizes):
        raise ConfigurationError(f"sizes must be positive and ascending, got {list(sizes)}")

    rng = rng if rng is not None else make_rng()
    records: List[BenchRecord] = []

    for algorithm in algorithms:
        algorithm = Algorithm(algorithm)
        for n in sizes:
            if algorithm.is_fft and not is_power_of_two(n):
                logger.warning(f"Skipping {algorithm.value} at N={n}: not a power of two")
                continue
            records.append(time_transform(algorithm, n, repeats, warmup, rng))
        logger.info(f"Benchmarked {algorithm.value} over {len(sizes)} sizes")

    return records


def _fit_through_origin(basis: np.ndarray, times: np.ndarray) -> tuple[float, float]:
    """Least-squares t = c*basis; returns (c, R^2) with R^2 clamped to [0, 1]."""
    solution, *_ = np.linalg.lstsq(basis[:, None], times, rcond=None)
    c = float(solution[0])
    residual = times - c * basis
    total = float(np.sum((times - times.mean()) ** 2))
    if total == 0.0:
        r2 = 1.0 if float(np.sum(residual**2)) == 0.0 else 0.0
    else:
        r2 = 1.0 - float(np.sum(residual**2)) / total
    return c, min(1.0, max(0.0, r2))


def _loglog_slope(sizes: np.ndarray, times: np.ndarray) -> float:
    return float(np.polyfit(np.log2(sizes), np.log2(times), 1)[0])


def _pick_fft_records(by_algorithm: Dict[Algorithm, List[BenchRecord]]) -> List[BenchRecord]:
    # the iterative variant is the performance path
    for algorithm in (Algorithm.FFT_ITERATIVE, Algorithm.FFT_RECURSIVE):
        if by_algorithm.get(algorithm):
            return by_algorithm[algorithm]
    return []


def fit_cost_model(records: Sequence[BenchRecord]) -> CostModelFit:
    """
    Fit t = c1*N^2 to naive timings and t = c2*N*log2(N) to FFT timings.

    Fits are linear least squares on the model basis, through the origin.
    Log-log slopes are reported alongside as a diagnostic; they should sit
    near 2 for the naive path and a little above 1 for the FFT.

    Args:
        records: Benchmark records; each fitted family needs at least 4 distinct sizes

    Returns:
        CostModelFit; fields for a family with no records stay None

    Raises:
        InsufficientDataError: If no family can be fitted, or a present family has < 4 sizes
    """
    by_algorithm: Dict[Algorithm, List[BenchRecord]] = {}
    for record in records:
        by_algorithm.setdefault(record.algorithm, []).append(record)

    families = {
        "quadratic": by_algorithm.get(Algorithm.NAIVE, []),
        "nlogn": _pick_fft_records(by_algorithm),
    }
    if not any(families.values()):
        raise InsufficientDataError("No benchmark records to fit")

    fit = CostModelFit()
    for family, group in families.items():
        if not group:
            continue
        distinct = sorted({r.n for r in group})
        if len(distinct) < MIN_FIT_SIZES:
            raise InsufficientDataError(
                f"{family} fit needs at least {MIN_FIT_SIZES} distinct sizes, got {len(distinct)}"
            )
        sizes = np.array([r.n for r in group], dtype=np.float64)
        times = np.array([r.wall_time for r in group], dtype=np.float64)
        if family == "quadratic":
            fit.c1, fit.r2_quadratic = _fit_through_origin(sizes**2, times)
            fit.slope_quadratic = _loglog_slope(sizes, times)
        else:
            basis = np.array([r.n * math.log2(r.n) for r in group], dtype=np.float64)
            fit.c2, fit.r2_nlogn = _fit_through_origin(basis, times)
            fit.slope_nlogn = _loglog_slope(sizes, times)

    logger.info(f"Cost model: c1={fit.c1} (R^2={fit.r2_quadratic}), c2={fit.c2} (R^2={fit.r2_nlogn})")
    return fit
