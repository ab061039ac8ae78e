__all__ = ["render_circle", "render_decomposition", "render_recycling_pair", "dot_position", "display_angle"]

from .svg import display_angle, dot_position, render_circle, render_decomposition, render_recycling_pair
