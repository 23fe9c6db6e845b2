"""CSV and SVG writers for sampled paths."""

from __future__ import annotations

import csv
import io
from typing import Sequence

import numpy as np

SVG_WIDTH = 1024
SVG_HEIGHT = 768
SVG_MARGIN = 0.05


def samples_csv(t, z) -> str:
    """Rows ``t, re, im``; UTF-8 text with LF line ends."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "re", "im"])
    for a, v in zip(np.asarray(t, dtype=float), np.asarray(z, dtype=complex)):
        w.writerow([repr(float(a)), repr(float(v.real)), repr(float(v.imag))])
    return buf.getvalue()


def _fmt(x: float) -> str:
    return f"{x:.6f}".rstrip("0").rstrip(".")


def svg_polylines(curves: Sequence, width: int = SVG_WIDTH, height: int = SVG_HEIGHT,
                  margin: float = SVG_MARGIN, stroke: float = 1.0, title: str = "") -> str:
    """SVG 1.1 document drawing each complex array in ``curves`` as a polyline.

    All curves share one affine map: the joint bounding box is scaled
    uniformly into the viewport less a margin on every side, with the
    imaginary axis pointing up.
    """
    pts = [np.asarray(c, dtype=complex) for c in curves]
    allz = np.concatenate(pts) if pts else np.zeros(1, dtype=complex)
    x0, x1 = float(allz.real.min()), float(allz.real.max())
    y0, y1 = float(allz.imag.min()), float(allz.imag.max())
    span = max(x1 - x0, y1 - y0, 1e-12)
    mx, my = margin * width, margin * height
    scale = min((width - 2 * mx) / max(x1 - x0, 1e-12 * span),
                (height - 2 * my) / max(y1 - y0, 1e-12 * span))
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">']
    if title:
        lines.append(f"<title>{title}</title>")
    for z in pts:
        px = width / 2 + (z.real - cx) * scale
        py = height / 2 - (z.imag - cy) * scale
        coords = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(px, py))
        lines.append(f'<polyline fill="none" stroke="black" stroke-width="{stroke:g}" points="{coords}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
