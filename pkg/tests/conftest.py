from pathlib import Path
from typing import Callable, List

import numpy as np
import pytest

from circle_fft.utils.config import make_rng, random_signal


@pytest.fixture
def rng() -> np.random.Generator:
    """Generator seeded from CIRCLEFFT_SEED (0 when unset) so failures reproduce."""
    return make_rng()


@pytest.fixture
def make_signal(rng) -> Callable[[int], np.ndarray]:
    """Factory for random complex signals with |a_n| <= 1."""

    def _make(n: int) -> np.ndarray:
        return random_signal(n, rng)

    return _make


@pytest.fixture
def hand_signal() -> List[complex]:
    """The four-term example a = [1, 2, 3, 4]."""
    return [1, 2, 3, 4]


@pytest.fixture
def hand_spectrum() -> List[complex]:
    """
    DFT of [1, 2, 3, 4], evaluated term by term:

    A_0 = 1 + 2 + 3 + 4                 = 10
    A_1 = 1 + 2(-i) + 3(-1) + 4(i)      = -2 + 2i
    A_2 = 1 + 2(-1) + 3(1) + 4(-1)      = -2
    A_3 = 1 + 2(i) + 3(-1) + 4(-i)      = -2 - 2i
    """
    return [10, -2 + 2j, -2, -2 - 2j]


@pytest.fixture
def constant_csv(tmp_path) -> Path:
    path = tmp_path / "constant.csv"
    path.write_text("# four ones\n1,0\n1,0\n\n1,0\n1,0\n")
    return path
