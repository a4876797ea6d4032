"""Standalone SVG heatmaps of coefficient matrices.

One ``rect.cell`` per coefficient and one ``text.label`` per row and column.
Colour runs linearly from white at 0 to a single dark hue at the matrix
maximum; negative entries are drawn as 0.
"""

from __future__ import annotations

import json
from typing import Sequence
from xml.sax.saxutils import escape, quoteattr

import numpy as np

from .csvio import ORIENTATION_NOTE

LOW = (255, 255, 255)
HIGH = (8, 48, 107)
CELL = 44
LEFT = 210
TOP = 190


def colour(value: float, vmax: float) -> str:
    t = 0.0 if vmax <= 0 else min(max(value / vmax, 0.0), 1.0)
    rgb = [round(lo + (hi - lo) * t) for lo, hi in zip(LOW, HIGH)]
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def render_heatmap(values, row_labels: Sequence[str], col_labels: Sequence[str],
                   title: str = "") -> str:
    m = np.asarray(values, dtype=np.float64)
    rows, cols = m.shape
    vmax = float(max(m.max(), 0.0))
    width = LEFT + cols * CELL + 20
    height = TOP + rows * CELL + 20
    meta = {
        "colour_ramp": "linear",
        "low": colour(0.0, 1.0),
        "high": colour(1.0, 1.0),
        "domain": [0.0, vmax],
        "normalisation": "per-matrix maximum",
        "orientation": ORIENTATION_NOTE,
    }
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f"<title>{escape(title)}</title>",
        f"<metadata>{escape(json.dumps(meta, sort_keys=True))}</metadata>",
        '<g class="cells">',
    ]
    for i in range(rows):
        for k in range(cols):
            v = m[i, k]
            out.append(
                f'<rect class="cell" x="{LEFT + k * CELL}" y="{TOP + i * CELL}" '
                f'width="{CELL}" height="{CELL}" fill="{colour(v, vmax)}" stroke="#cccccc" '
                f'data-row="{i + 1}" data-col="{k + 1}" data-value="{float(v):.6g}"/>'
            )
    out.append("</g>")
    out.append('<g class="labels">')
    for i, label in enumerate(row_labels):
        y = TOP + i * CELL + CELL / 2 + 4
        out.append(f'<text class="label" x="{LEFT - 8}" y="{y}" text-anchor="end">{escape(label)}</text>')
    for k, label in enumerate(col_labels):
        x = LEFT + k * CELL + CELL / 2
        y = TOP - 8
        out.append(
            f'<text class="label" x="{x}" y="{y}" text-anchor="start" '
            f'transform={quoteattr(f"rotate(-60 {x} {y})")}>{escape(label)}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
