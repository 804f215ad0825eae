"""SVG renderings of the two chamber diagrams.

Pixel positions are rounded floats for display only; every geometric element
also carries its exact rational coordinates in ``data-*`` attributes, which is
what tests and downstream tools should read.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

from . import mmp, naruki
from .rational import fmt

PALETTE = {
    "NOT_EFFECTIVE": "#eeeeee",
    "M_BAR": "#fde0c5",
    "Y_BAR": "#c6e2ff",
    "Y1": "#d5f5d0",
    "Y2": "#f6d5f7",
    "Y_TILDE": "#fff6b3",
    "EMPTY": "#ffffff",
    "B_A23": "#fde0c5",
    "B_2A1": "#c6e2ff",
    "B_A1": "#d5f5d0",
}


def _num(x) -> str:
    return f"{float(x):.2f}"


def _sub(parent: ET.Element, tag: str, **attrs) -> ET.Element:
    return ET.SubElement(parent, tag, {k.replace("_", "-"): str(v) for k, v in attrs.items()})


def figure1_group(size: int = 300, origin: tuple[int, int] = (0, 0)) -> ET.Element:
    """Fan of the Y_BAR effective cone, B_A1 horizontal and B_A23 vertical."""
    rays, chambers = naruki.figure1_data()
    ox, oy = origin
    pad = 30
    base_x, base_y = ox + pad, oy + size - pad
    length = size - 2 * pad

    def tip(v) -> tuple[float, float]:
        x, y = Fraction(v[0]), Fraction(v[1])
        scale = length / max(x, y)
        return base_x + float(x * scale), base_y - float(y * scale)

    g = ET.Element("g", {"id": "figure1", "data-figure": "1"})
    for ch in chambers:
        (x1, y1), (x2, y2) = tip(ch.between[0]), tip(ch.between[1])
        _sub(
            g,
            "polygon",
            points=f"{_num(base_x)},{_num(base_y)} {_num(x1)},{_num(y1)} {_num(x2)},{_num(y2)}",
            fill=PALETTE[ch.region.value],
            stroke="none",
            data_region=ch.region.value,
            data_between=";".join(f"{a},{b}" for a, b in ch.between),
        )
        mx, my = (base_x + x1 + x2) / 3, (base_y + y1 + y2) / 3
        text = _sub(g, "text", x=_num(mx), y=_num(my), font_size=11, text_anchor="middle")
        text.text = ch.label
    for r in rays:
        x, y = tip(r.vector)
        _sub(
            g,
            "line",
            x1=_num(base_x),
            y1=_num(base_y),
            x2=_num(x),
            y2=_num(y),
            stroke="black",
            data_ray=f"{r.vector[0]},{r.vector[1]}",
            data_label=r.label,
        )
        label = _sub(g, "text", x=_num(x + 3), y=_num(y - 3), font_size=10)
        label.text = r.label
    return g


def figure2_group(scale: int = 360, origin: tuple[int, int] = (0, 0)) -> ET.Element:
    """Regions of the (c, d) rectangle, c horizontal and d vertical."""
    fig = mmp.figure2_data()
    ox, oy = origin
    pad = 40
    height = float(mmp.D_MAX) * scale

    def px(p) -> tuple[float, float]:
        return ox + pad + float(p[0]) * scale, oy + pad + height - float(p[1]) * scale

    g = ET.Element("g", {"id": "figure2", "data-figure": "2"})
    for label, poly in fig.regions:
        pts = " ".join(f"{_num(px(p)[0])},{_num(px(p)[1])}" for p in poly)
        _sub(
            g,
            "polygon",
            points=pts,
            fill=PALETTE[label.value],
            stroke="none",
            data_region=label.value,
            data_vertices=";".join(f"{fmt(p[0])},{fmt(p[1])}" for p in poly),
        )
        cx = sum(px(p)[0] for p in poly) / len(poly)
        cy = sum(px(p)[1] for p in poly) / len(poly)
        text = _sub(g, "text", x=_num(cx), y=_num(cy), font_size=10, text_anchor="middle")
        text.text = label.value
    for name, (p, q), hits in fig.lines:
        (x1, y1), (x2, y2) = px(p), px(q)
        _sub(
            g,
            "line",
            x1=_num(x1),
            y1=_num(y1),
            x2=_num(x2),
            y2=_num(y2),
            stroke="black",
            data_equation=name,
            data_segment=f"{fmt(p[0])},{fmt(p[1])};{fmt(q[0])},{fmt(q[1])}",
            data_c_hit=fmt(hits["c"]),
            data_d_hit=fmt(hits["d"]),
        )
    corners = [px(p) for p in mmp.RECTANGLE]
    _sub(
        g,
        "polygon",
        points=" ".join(f"{_num(x)},{_num(y)}" for x, y in corners),
        fill="none",
        stroke="black",
        data_rectangle=";".join(f"{fmt(p[0])},{fmt(p[1])}" for p in mmp.RECTANGLE),
    )
    for axis, text in (("c", "c"), ("d", "d")):
        x, y = (corners[1][0] + 8, corners[1][1]) if axis == "c" else (corners[3][0], corners[3][1] - 8)
        t = _sub(g, "text", x=_num(x), y=_num(y), font_size=12)
        t.text = text
    return g


def render(which: str = "both", scale: int = 360) -> str:
    """Standalone SVG document with figure 1, figure 2 or both side by side."""
    groups = []
    width = 0
    height = 0
    if which in ("1", "both"):
        groups.append(figure1_group(300, (width, 0)))
        width += 320
        height = max(height, 300)
    if which in ("2", "both"):
        groups.append(figure2_group(scale, (width, 0)))
        width += scale + 80
        height = max(height, int(float(mmp.D_MAX) * scale) + 80)
    if not groups:
        raise ValueError(f"unknown figure selection {which!r}")
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": str(width),
            "height": str(height),
            "viewBox": f"0 0 {width} {height}",
        },
    )
    root.extend(groups)
    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"
