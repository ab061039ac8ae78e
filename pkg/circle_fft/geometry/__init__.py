__all__ = [
    "term_angle",
    "default_labels",
    "caption",
    "layout_terms",
    "layout_decomposition",
    "layout_recycling_pair",
    "panel_sum",
    "decomposition_bins",
]

from .layout import (
    caption,
    decomposition_bins,
    default_labels,
    layout_decomposition,
    layout_recycling_pair,
    layout_terms,
    panel_sum,
    term_angle,
)
