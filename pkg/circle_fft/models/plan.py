from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from .signal import TwiddleTable


class FftPlan(BaseModel):
    """
    Precomputed state for radix-2 transforms of one power-of-two size.

    Immutable once built; one plan can be shared by any number of concurrent
    transform calls. `stage_twiddles[s]` holds the factors used by pass s,
    the half-size-2^s slice factors[0 : N/2 : N/2^(s+1)] laid out contiguously.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    order: int
    twiddles: TwiddleTable
    bit_reversal: np.ndarray
    stage_twiddles: Tuple[np.ndarray, ...] = ()

    @property
    def levels(self) -> int:
        """Number of butterfly passes, log2(N)"""
        return self.order.bit_length() - 1

    @model_validator(mode="after")
    def check_stages(self) -> "FftPlan":
        if len(self.stage_twiddles) != self.levels:
            raise ValueError(f"expected {self.levels} stage twiddle slices, got {len(self.stage_twiddles)}")
        for s, w in enumerate(self.stage_twiddles):
            if w.size != 1 << s:
                raise ValueError(f"stage {s} needs {1 << s} twiddles, got {w.size}")
        return self
