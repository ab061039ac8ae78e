from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Algorithm(str, Enum):
    NAIVE = "naive"
    FFT_RECURSIVE = "fft_recursive"
    FFT_ITERATIVE = "fft_iterative"

    @property
    def is_fft(self) -> bool:
        return self is not Algorithm.NAIVE


class OpCount(BaseModel):
    """
    Tally of complex multiplications and complex additions.

    Transforms accept an optional OpCount as a counter sink and call
    `record()` for every vectorised step they perform. A sink belongs to
    its caller; concurrent runs must use distinct sinks.
    """

    mults: int = Field(0, ge=0)
    adds: int = Field(0, ge=0)

    def record(self, mults: int = 0, adds: int = 0) -> None:
        self.mults += mults
        self.adds += adds

    def reset(self) -> None:
        self.mults = 0
        self.adds = 0

    def __add__(self, other: "OpCount") -> "OpCount":
        return OpCount(mults=self.mults + other.mults, adds=self.adds + other.adds)


class BenchRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(alias="N")
    algorithm: Algorithm
    repeats: int = Field(ge=1)
    wall_time: float = Field(gt=0.0, alias="median_seconds")
    counts: OpCount

    def to_csv_row(self) -> list[str]:
        return [
            self.algorithm.value,
            str(self.n),
            str(self.repeats),
            repr(self.wall_time),
            str(self.counts.mults),
            str(self.counts.adds),
        ]


class CostModelFit(BaseModel):
    """Least-squares constants for t = c1*N^2 (naive) and t = c2*N*log2(N) (fft)"""

    c1: Optional[float] = None
    c2: Optional[float] = None
    r2_quadratic: Optional[float] = None
    r2_nlogn: Optional[float] = None

    # log-log slope diagnostics
    slope_quadratic: Optional[float] = None
    slope_nlogn: Optional[float] = None


class RecurrenceLevel(BaseModel):
    """Measured against expected counts for one power of two"""

    n: int
    mults: int
    adds: int
    expected_mults: int
    expected_adds: int
    naive_mults: int
    # N + N*log2(N): every element touched by the 1-point DFTs plus the butterflies
    touches: int
    ok: bool
    message: Optional[str] = None


class RecurrenceReport(BaseModel):
    max_n: int
    levels: List[RecurrenceLevel] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(level.ok for level in self.levels)

    @property
    def first_failure(self) -> Optional[RecurrenceLevel]:
        return next((level for level in self.levels if not level.ok), None)

    @model_validator(mode="after")
    def check_ordered(self) -> "RecurrenceReport":
        sizes = [level.n for level in self.levels]
        if sizes != sorted(sizes):
            raise ValueError("Recurrence levels must be in ascending order of N")
        return self
