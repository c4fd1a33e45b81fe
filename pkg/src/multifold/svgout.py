"""SVG rendering of a concrete scene.

One ``<line>`` per scene element is the semantic content; the sheet outline
and labels are cosmetic.  The y axis points up via an explicit transform,
and one sheet unit maps to 100 display units.
"""

from __future__ import annotations

from .document import rational_to_str
from .simulator import ConcreteScene, element_segments

SHEET_UNIT = 100.0

_STYLES = {
    "crease": "stroke:#888888;stroke-width:2;stroke-dasharray:6 4",
    "sheet": "stroke:#2266cc;stroke-width:3",
    "strip": "stroke:#111111;stroke-width:3",
    "pair": "stroke:#cc2222;stroke-width:4",
}


def _style_for(element_id: str) -> str:
    if element_id in ("zero-crease", "one-crease", "diagonal-reference"):
        return _STYLES["crease"]
    if element_id == "sheet-x":
        return _STYLES["sheet"]
    if ".pair-" in element_id or element_id.startswith("seed."):
        return _STYLES["pair"]
    return _STYLES["strip"]


def render_svg(cs: ConcreteScene) -> str:
    """SVG 1.1 document with one line element per scene element."""
    width = float(cs.extents.width) * SHEET_UNIT
    height = float(cs.extents.height) * SHEET_UNIT
    margin = SHEET_UNIT / 2
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<!-- final-gap: {rational_to_str(cs.final_gap)} -->',
        f'<!-- parameter-x: {rational_to_str(cs.x)} -->',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width + 2 * margin:.1f}" height="{height + 2 * margin:.1f}" '
        f'viewBox="0 0 {width + 2 * margin:.1f} {height + 2 * margin:.1f}">',
        # Flip the y axis so vertical coordinates increase upward.
        f'<g transform="translate({margin:.1f},{margin + height / 2:.1f}) scale(1,-1)">',
        f'<rect x="0" y="{-height / 2:.1f}" width="{width:.1f}" height="{height:.1f}" '
        'style="fill:#fdfdf5;stroke:#bbbbbb;stroke-width:1"/>',
    ]
    for eid, ((u1, v1), (u2, v2)) in element_segments(cs).items():
        lines.append(
            f'<line x1="{float(u1) * SHEET_UNIT:.2f}" y1="{float(v1) * SHEET_UNIT:.2f}" '
            f'x2="{float(u2) * SHEET_UNIT:.2f}" y2="{float(v2) * SHEET_UNIT:.2f}" '
            f'style="{_style_for(eid)}"><title>{eid}</title></line>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
