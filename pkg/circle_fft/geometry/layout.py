import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import ValidationError

from circle_fft.models import CirclePlacement, CombineSign, DecompositionFigure, Panel
from circle_fft.transforms import butterfly, twiddle_table
from circle_fft.utils.exceptions import LayoutError

logger = logging.getLogger("circle_fft.geometry")

ODD_FACTOR_LABEL = "e^{iθ}"


def term_angle(n: int, k: int, size: int) -> float:
    """
    Angle k*theta_n reduced into (-2*pi, 0], with theta_n = -2*pi*n/N.

    The exponent n*k is reduced mod N in exact integer arithmetic before
    being scaled, so large products do not drift.
    """
    return -2.0 * math.pi * ((n * k) % size) / size + 0.0


def default_labels(size: int) -> List[str]:
    return [f"a_{n}" for n in range(size)]


def _resolve_labels(size: int, labels: Optional[Sequence[str]]) -> List[str]:
    if labels is None:
        return default_labels(size)
    if len(labels) != size:
        raise LayoutError(f"Expected {size} labels, got {len(labels)}")
    for label in labels:
        if not isinstance(label, str):
            raise LayoutError(f"Labels must be strings, got {label!r}")
    return list(labels)


def caption(k: int, labels: Sequence[str]) -> str:
    return f"A_{k}{{{','.join(labels)}}}"


def layout_terms(size: int, k: int, labels: Optional[Sequence[str]] = None) -> List[CirclePlacement]:
    """
    Place every term a_n e^{i k theta_n} of A_k on the unit circle.

    For k = 1 consecutive terms sit 2*pi/N apart; for k sharing a factor with
    N several terms land on one point and are drawn stacked there.

    Args:
        size: Number of terms N >= 1
        k: Bin index, 0 <= k < N
        labels: Optional text per term, default a_0..a_{N-1}

    Returns:
        N placements in index order, all on the full panel

    Raises:
        LayoutError: If N < 1, k is out of range, or the labels are not N strings
    """
    if size < 1:
        raise LayoutError(f"N must be at least 1, got {size}")
    if not 0 <= k < size:
        raise LayoutError(f"k must be in [0, {size}), got {k}")
    names = _resolve_labels(size, labels)
    try:
        return [
            CirclePlacement(label=names[n], index=n, angle=term_angle(n, k, size), panel=Panel.FULL)
            for n in range(size)
        ]
    except ValidationError as e:
        raise LayoutError(f"Invalid placement for N={size} k={k}: {e}") from e


def _half_panels(size: int, k: int, names: Sequence[str]) -> Tuple[List[CirclePlacement], List[CirclePlacement]]:
    half = size // 2
    kk = k % half
    even = [
        CirclePlacement(label=names[2 * m], index=2 * m, angle=term_angle(m, kk, half), panel=Panel.EVEN)
        for m in range(half)
    ]
    # one twiddle factored out, so a_{2m+1} sits where a_{2m} does
    odd = [
        CirclePlacement(label=names[2 * m + 1], index=2 * m + 1, angle=term_angle(m, kk, half), panel=Panel.ODD)
        for m in range(half)
    ]
    return even, odd


def layout_decomposition(size: int, k: int, labels: Optional[Sequence[str]] = None) -> DecompositionFigure:
    """
    Lay out A_k as (even half-circle) +/- e^{i theta} (odd half-circle).

    The half-size panels depend only on k mod N/2, so bins k and k + N/2 share
    them; the sign is + for k < N/2 and - otherwise.

    Args:
        size: Even number of terms N
        k: Bin index, 0 <= k < N
        labels: Optional text per term

    Returns:
        DecompositionFigure for bin k

    Raises:
        LayoutError: If N is odd or k is out of range
    """
    if size < 2 or size % 2:
        raise LayoutError(f"Decomposition needs an even N >= 2, got {size}")
    lhs = layout_terms(size, k, labels)
    names = [p.label for p in lhs]
    even, odd = _half_panels(size, k, names)
    sign = CombineSign.PLUS if k < size // 2 else CombineSign.MINUS
    logger.debug(f"Decomposition N={size} k={k} combines with {sign.value}")
    try:
        return DecompositionFigure(
            n=size,
            k=k,
            lhs=lhs,
            even_panel=even,
            odd_panel=odd,
            odd_factor_label=ODD_FACTOR_LABEL,
            combine_sign=sign,
            caption=caption(k, names),
        )
    except ValidationError as e:
        raise LayoutError(f"Invalid decomposition for N={size} k={k}: {e}") from e


def layout_recycling_pair(
    size: int, k: int, labels: Optional[Sequence[str]] = None
) -> Tuple[DecompositionFigure, DecompositionFigure]:
    """
    The two bins one butterfly produces: A_k with + and A_{k+N/2} with -.

    Raises:
        LayoutError: If N is odd or k is not in [0, N/2)
    """
    if size < 2 or size % 2:
        raise LayoutError(f"Decomposition needs an even N >= 2, got {size}")
    if not 0 <= k < size // 2:
        raise LayoutError(f"k must be in [0, {size // 2}) for a recycling pair, got {k}")
    return layout_decomposition(size, k, labels), layout_decomposition(size, k + size // 2, labels)


def panel_sum(placements: Sequence[CirclePlacement], values: Sequence[complex]) -> complex:
    """Sum of values[p.index] * e^{i*angle} over the placements of one panel."""
    total = 0j
    for p in placements:
        total += values[p.index] * complex(math.cos(p.angle), math.sin(p.angle))
    return total


def decomposition_bins(fig: DecompositionFigure, values: Sequence[complex]) -> Tuple[complex, complex]:
    """
    Evaluate a figure's panels and recombine them with one butterfly.

    The even and odd panel sums are the half-size bins E and O at k mod N/2;
    the butterfly with factors[k mod N/2] gives the pair (A_k, A_{k+N/2})
    for k < N/2, or (A_{k-N/2}, A_k) otherwise.

    Returns:
        Tuple of (plus bin, minus bin)
    """
    half = fig.n // 2
    w = twiddle_table(fig.n).factors[fig.k % half]
    even = np.array([panel_sum(fig.even_panel, values)])
    odd = np.array([panel_sum(fig.odd_panel, values)])
    upper, lower = butterfly(even, odd, np.array([w]))
    return complex(upper[0]), complex(lower[0])
