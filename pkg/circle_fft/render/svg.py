import logging
import math
import xml.etree.ElementTree as ET
from typing import Dict, List, Optional, Sequence, Tuple

from circle_fft.models import CirclePlacement, DecompositionFigure, RenderStyle

logger = logging.getLogger("circle_fft.render")

SVG_NS = "http://www.w3.org/2000/svg"
XML_HEADER = '<?xml version="1.0" encoding="UTF-8"?>\n'


def _fmt(value: float) -> str:
    # fixed precision keeps output byte-stable; + 0.0 drops negative zero
    return f"{round(value, 6) + 0.0:.6f}"


def display_angle(placement: CirclePlacement) -> float:
    """
    Angle to draw a placement at.

    Placements carry k*theta_n with theta_n = -2*pi*n/N; drawing the negated
    angle puts a_0, a_1, ... counterclockwise, as in the hand-drawn figures.
    """
    return -placement.angle


def dot_position(placement: CirclePlacement, cx: float, cy: float, radius: float) -> Tuple[float, float]:
    """SVG coordinates of a placement on a circle centred at (cx, cy); y grows downward."""
    theta = display_angle(placement)
    return cx + radius * math.cos(theta), cy - radius * math.sin(theta)


def _root(width: float, height: float) -> ET.Element:
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "width": _fmt(width),
            "height": _fmt(height),
            "viewBox": f"0 0 {_fmt(width)} {_fmt(height)}",
        },
    )
    ET.SubElement(root, "rect", {"width": "100%", "height": "100%", "fill": "white"})
    return root


def _text(parent: ET.Element, x: float, y: float, text: str, style: RenderStyle, css_class: str, scale: float = 1.0) -> None:
    node = ET.SubElement(
        parent,
        "text",
        {
            "class": css_class,
            "x": _fmt(x),
            "y": _fmt(y),
            "font-family": "serif",
            "font-size": _fmt(style.font_size * scale),
            "text-anchor": "middle",
            "dominant-baseline": "middle",
        },
    )
    node.text = text


def _group_coincident(placements: Sequence[CirclePlacement]) -> List[List[CirclePlacement]]:
    """Bucket placements that land on the same point, keeping first-seen order."""
    buckets: Dict[int, List[CirclePlacement]] = {}
    for p in placements:
        # angles are multiples of 2*pi/N; snap to a fine grid to merge equal points
        key = round((display_angle(p) % (2 * math.pi)) * 1e9) % round(2 * math.pi * 1e9)
        buckets.setdefault(key, []).append(p)
    return list(buckets.values())


def _draw_panel(
    parent: ET.Element, placements: Sequence[CirclePlacement], cx: float, cy: float, style: RenderStyle, row: int = 0
) -> None:
    panel = placements[0].panel.value if placements else "full"
    group = ET.SubElement(parent, "g", {"class": "panel", "data-panel": panel, "data-row": str(row)})
    ET.SubElement(
        group,
        "circle",
        {
            "class": "outline",
            "cx": _fmt(cx),
            "cy": _fmt(cy),
            "r": _fmt(style.circle_radius),
            "fill": "none",
            "stroke": "black",
        },
    )

    label_offset = style.dot_radius + 0.9 * style.font_size
    for bucket in _group_coincident(placements):
        x, y = dot_position(bucket[0], cx, cy, style.circle_radius)
        ET.SubElement(
            group,
            "circle",
            {
                "class": "dot",
                "cx": _fmt(x),
                "cy": _fmt(y),
                "r": _fmt(style.dot_radius),
                "fill": "black",
                "data-indices": " ".join(str(p.index) for p in bucket),
            },
        )
        # stacked labels, pushed outward from the circle
        theta = display_angle(bucket[0])
        for depth, p in enumerate(bucket):
            reach = style.circle_radius + label_offset + depth * style.font_size
            _text(group, cx + reach * math.cos(theta), cy - reach * math.sin(theta), p.label, style, "label")


def _serialize(root: ET.Element) -> str:
    ET.indent(root)
    return XML_HEADER + ET.tostring(root, encoding="unicode") + "\n"


def render_circle(
    placements: Sequence[CirclePlacement], style: Optional[RenderStyle] = None, caption: Optional[str] = None
) -> str:
    """
    Draw the terms of one sum on a single circle.

    Args:
        placements: Non-empty placements, typically from layout_terms
        style: Pixel dimensions, defaults when omitted
        caption: Optional text under the circle, e.g. "A_1{a_0,...,a_7}"

    Returns:
        Standalone SVG document text

    Raises:
        ValueError: If placements is empty
    """
    if not placements:
        raise ValueError("Cannot render an empty set of placements")
    style = style or RenderStyle()

    size = style.row_height
    height = size + (2 * style.font_size if caption else 0.0)
    root = _root(size, height)
    center = style.margin + style.circle_radius
    _draw_panel(root, placements, center, center, style)
    if caption:
        _text(root, center, size + style.font_size, caption, style, "caption")

    logger.debug(f"Rendered circle with {len(placements)} placements")
    return _serialize(root)


def _row_width(style: RenderStyle) -> float:
    return 3 * 2 * style.circle_radius + 4 * style.panel_gap + 2 * style.margin


def _draw_decomposition_row(root: ET.Element, fig: DecompositionFigure, top: float, style: RenderStyle, row: int) -> None:
    r = style.circle_radius
    cy = top + style.margin + r
    left = 2 * style.margin + style.panel_gap
    centers = [left + r + i * (2 * r + style.panel_gap) for i in range(3)]

    _text(root, style.margin + style.panel_gap / 2, cy, f"A_{fig.k}", style, "bin")
    _draw_panel(root, fig.lhs, centers[0], cy, style, row)
    _draw_panel(root, fig.even_panel, centers[1], cy, style, row)
    _draw_panel(root, fig.odd_panel, centers[2], cy, style, row)

    gap_mid = [centers[i] + r + style.panel_gap / 2 for i in range(2)]
    _text(root, gap_mid[0], cy, "=", style, "connector", 1.5)
    _text(root, gap_mid[1] - 0.25 * style.panel_gap, cy, fig.combine_sign.glyph, style, "connector", 1.5)
    _text(root, gap_mid[1] + 0.15 * style.panel_gap, cy, fig.odd_factor_label, style, "factor", 1.3)


def render_decomposition(fig: DecompositionFigure, style: Optional[RenderStyle] = None) -> str:
    """
    Draw A_k = (even half) +/- e^{i theta} (odd half) as one row of three circles.

    Returns:
        Standalone SVG document text
    """
    style = style or RenderStyle()
    height = style.row_height + 2 * style.font_size
    root = _root(_row_width(style), height)
    _draw_decomposition_row(root, fig, 0.0, style, 0)
    if fig.caption:
        _text(root, _row_width(style) / 2, style.row_height + style.font_size, fig.caption, style, "caption")
    logger.debug(f"Rendered decomposition N={fig.n} k={fig.k} ({fig.combine_sign.value})")
    return _serialize(root)


def render_recycling_pair(
    figures: Tuple[DecompositionFigure, DecompositionFigure], style: Optional[RenderStyle] = None
) -> str:
    """
    Draw the plus row for A_k above the minus row for A_{k+N/2}.

    Both rows use the same half-size panels: the subtraction reuses the two
    sums computed for the addition.

    Returns:
        Standalone SVG document text
    """
    style = style or RenderStyle()
    width = _row_width(style)
    root = _root(width, 2 * style.row_height + 2 * style.font_size)
    for row, fig in enumerate(figures):
        _draw_decomposition_row(root, fig, row * style.row_height, style, row)
    captions = "   ".join(fig.caption for fig in figures if fig.caption)
    if captions:
        _text(root, width / 2, 2 * style.row_height + style.font_size, captions, style, "caption")
    return _serialize(root)
