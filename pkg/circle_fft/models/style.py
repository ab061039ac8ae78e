from pydantic import BaseModel, ConfigDict, Field

from circle_fft.utils.constants import (
    DEFAULT_CIRCLE_RADIUS,
    DEFAULT_DOT_RADIUS,
    DEFAULT_FONT_SIZE,
    DEFAULT_PANEL_GAP,
)


class RenderStyle(BaseModel):
    """Pixel dimensions for SVG output"""

    model_config = ConfigDict(frozen=True)

    circle_radius: float = Field(DEFAULT_CIRCLE_RADIUS, gt=0.0)
    panel_gap: float = Field(DEFAULT_PANEL_GAP, gt=0.0)
    font_size: float = Field(DEFAULT_FONT_SIZE, gt=0.0)
    dot_radius: float = Field(DEFAULT_DOT_RADIUS, gt=0.0)

    @property
    def margin(self) -> float:
        """Space around each circle, half a panel gap"""
        return self.panel_gap / 2

    @property
    def row_height(self) -> float:
        return 2 * (self.circle_radius + self.margin)
