import math
import xml.etree.ElementTree as ET

import pytest

from circle_fft.geometry import layout_decomposition, layout_recycling_pair, layout_terms
from circle_fft.models import CirclePlacement, RenderStyle
from circle_fft.render import render_circle, render_decomposition, render_recycling_pair

NS = {"svg": "http://www.w3.org/2000/svg"}


def parse(document: str) -> ET.Element:
    return ET.fromstring(document.encode("utf-8"))


def panels(root: ET.Element, name: str):
    return [g for g in root.iter(f"{{{NS['svg']}}}g") if g.get("data-panel") == name]


def dots(panel: ET.Element):
    return panel.findall("svg:circle[@class='dot']", NS)


def outline(panel: ET.Element) -> ET.Element:
    node = panel.find("svg:circle[@class='outline']", NS)
    assert node is not None
    return node


def display_angles(panel: ET.Element):
    """Invert the coordinate transform: angle of each dot around its outline's centre."""
    ring = outline(panel)
    cx, cy = float(ring.get("cx")), float(ring.get("cy"))
    return [math.atan2(cy - float(d.get("cy")), float(d.get("cx")) - cx) for d in dots(panel)]


def texts(root: ET.Element, css_class: str):
    return [t.text for t in root.iter(f"{{{NS['svg']}}}text") if t.get("class") == css_class]


def test_single_placement_coordinates():
    placement = CirclePlacement(label="a_0", index=0, angle=0.0)
    root = parse(render_circle([placement], RenderStyle(circle_radius=100, panel_gap=100)))
    (dot,) = dots(panels(root, "full")[0])
    assert (float(dot.get("cx")), float(dot.get("cy"))) == (250.0, 150.0)
    ring = outline(panels(root, "full")[0])
    assert (ring.get("cx"), ring.get("cy"), ring.get("r")) == ("150.000000", "150.000000", "100.000000")


def test_eight_terms_are_45_degrees_apart():
    root = parse(render_circle(layout_terms(8, 1)))
    (full,) = panels(root, "full")
    assert len(dots(full)) == 8
    angles = display_angles(full)
    for a, b in zip(angles, angles[1:] + angles[:1]):
        gap = (b - a) % (2 * math.pi)
        assert abs(math.degrees(gap) - 45.0) <= 1e-6


def test_labels_run_counterclockwise():
    root = parse(render_circle(layout_terms(8, 1)))
    (full,) = panels(root, "full")
    angles = display_angles(full)
    # a_2 is drawn at the top of the circle
    assert math.degrees(angles[2]) == pytest.approx(90.0, abs=1e-6)
    assert [d.get("data-indices") for d in dots(full)] == [str(n) for n in range(8)]


def test_coordinate_round_trip_recovers_angles():
    placements = layout_terms(16, 3)
    root = parse(render_circle(placements))
    (full,) = panels(root, "full")
    recovered = dict(zip((d.get("data-indices") for d in dots(full)), display_angles(full)))
    for p in placements:
        key = next(k for k in recovered if str(p.index) in k.split())
        diff = (recovered[key] + p.angle) % (2 * math.pi)
        assert min(diff, 2 * math.pi - diff) <= 1e-6


def test_stacked_labels_share_one_dot():
    root = parse(render_circle(layout_terms(4, 0)))
    (full,) = panels(root, "full")
    (dot,) = dots(full)
    assert dot.get("data-indices") == "0 1 2 3"
    assert texts(root, "label") == ["a_0", "a_1", "a_2", "a_3"]


def test_caption_is_optional():
    plain = parse(render_circle(layout_terms(4, 1)))
    captioned = parse(render_circle(layout_terms(4, 1), caption="A_1{a_0,a_1,a_2,a_3}"))
    assert texts(plain, "caption") == []
    assert texts(captioned, "caption") == ["A_1{a_0,a_1,a_2,a_3}"]


def test_output_is_deterministic_and_self_contained():
    first = render_circle(layout_terms(8, 1))
    assert first == render_circle(layout_terms(8, 1))
    assert first.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    assert "href" not in first and "<image" not in first


def test_render_circle_rejects_empty():
    with pytest.raises(ValueError):
        render_circle([])


def test_decomposition_plus_row():
    root = parse(render_decomposition(layout_decomposition(8, 1)))
    assert texts(root, "connector") == ["=", "+"]
    assert texts(root, "factor") == ["e^{iθ}"]
    assert len(dots(panels(root, "full")[0])) == 8
    assert len(dots(panels(root, "even")[0])) == 4
    assert len(dots(panels(root, "odd")[0])) == 4


def test_decomposition_minus_row():
    document = render_decomposition(layout_decomposition(8, 5))
    root = parse(document)
    assert texts(root, "connector") == ["=", "−"]
    assert "e^{iθ}" in texts(root, "factor")


def test_smallest_decomposition():
    root = parse(render_decomposition(layout_decomposition(2, 0)))
    assert len(dots(panels(root, "even")[0])) == 1
    assert len(dots(panels(root, "odd")[0])) == 1


def test_recycling_pair_has_both_rows():
    root = parse(render_recycling_pair(layout_recycling_pair(8, 1)))
    assert texts(root, "connector") == ["=", "+", "=", "−"]
    assert sorted({g.get("data-row") for g in panels(root, "even")}) == ["0", "1"]
    assert texts(root, "bin") == ["A_1", "A_5"]


def test_style_must_be_positive():
    with pytest.raises(ValueError):
        RenderStyle(circle_radius=0)
