import math
from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Panel(str, Enum):
    FULL = "full"
    EVEN = "even"
    ODD = "odd"


class CombineSign(str, Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def glyph(self) -> str:
        return "+" if self is CombineSign.PLUS else "−"

    @property
    def factor(self) -> int:
        return 1 if self is CombineSign.PLUS else -1


class CirclePlacement(BaseModel):
    """One DFT term a_n drawn at angle k*theta_n on a circle"""

    model_config = ConfigDict(frozen=True)

    label: str
    index: int = Field(ge=0)
    angle: float = Field(gt=-2 * math.pi, lt=2 * math.pi)
    radius: float = Field(1.0, gt=0.0)
    panel: Panel = Panel.FULL


class DecompositionFigure(BaseModel):
    """A_k drawn as the full circle, the even half-circle and the rotated odd half-circle"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2)
    k: int = Field(ge=0)
    lhs: List[CirclePlacement]
    even_panel: List[CirclePlacement]
    odd_panel: List[CirclePlacement]
    odd_factor_label: str = "e^{iθ}"
    combine_sign: CombineSign
    caption: str = ""

    @model_validator(mode="after")
    def check_panels(self) -> "DecompositionFigure":
        half = self.n // 2
        if len(self.lhs) != self.n:
            raise ValueError(f"lhs has {len(self.lhs)} placements, expected {self.n}")
        if len(self.even_panel) != half or len(self.odd_panel) != half:
            raise ValueError(f"even and odd panels must each have {half} placements")
        expected = CombineSign.PLUS if self.k % self.n < half else CombineSign.MINUS
        if self.combine_sign is not expected:
            raise ValueError(f"k={self.k} of N={self.n} combines with {expected.value}")
        indices = sorted(p.index for p in self.even_panel + self.odd_panel)
        if indices != list(range(self.n)):
            raise ValueError("even and odd panels must partition the indices 0..N-1")
        return self
