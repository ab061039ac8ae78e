import logging
import os
from typing import Optional

import numpy as np

from circle_fft.utils.constants import DEFAULT_SEED, SEED_ENV_VAR
from circle_fft.utils.exceptions import ConfigurationError

logger = logging.getLogger("circle_fft.utils")


def get_seed() -> int:
    """
    Seed for generated test data, read from CIRCLEFFT_SEED.

    Returns:
        The integer seed, or DEFAULT_SEED when the variable is unset or empty

    Raises:
        ConfigurationError: If the variable is set but not an integer
    """
    raw = os.environ.get(SEED_ENV_VAR, "").strip()
    if not raw:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    seed = get_seed() if seed is None else seed
    logger.debug(f"Random generator seeded with {seed}")
    return np.random.default_rng(seed)


def random_signal(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Complex samples drawn uniformly from the disc of radius `scale`."""
    radius = scale * np.sqrt(rng.random(n))
    phase = 2 * np.pi * rng.random(n)
    return radius * np.exp(1j * phase)
