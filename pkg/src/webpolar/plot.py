"""SVG pictures of a web: leaves of both foliations, the polar curve, singular points."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from .bipoly import BiPoly, squarefree_part
from .contact import FoliationSingularError, LeafParams, NumericNonConvergence, trace_leaf
from .contour import zero_set_segments
from .oneform import OneForm, Web
from .polar import find_singular_points, polar_curve

SIZE = 600
MARGIN = 20
OMEGA_COLOR = "#1f77b4"
ETA_COLOR = "#2ca02c"
POLAR_COLOR = "#d62728"
EXCLUDED_COLOR = "#7f7f7f"
# looser than the analysis defaults; pictures do not need 1e-10 accuracy
PLOT_LEAF_PARAMS = LeafParams(max_step=0.02, rtol=1e-7, atol=1e-9, max_length=40.0)


class _Frame:
    def __init__(self, region):
        self.xmin, self.xmax, self.ymin, self.ymax = region
        inner = SIZE - 2 * MARGIN
        self.scale = inner / max(self.xmax - self.xmin, self.ymax - self.ymin)

    def __call__(self, x, y) -> str:
        u = MARGIN + (x - self.xmin) * self.scale
        v = MARGIN + (self.ymax - y) * self.scale
        return f"{u:.2f},{v:.2f}"


def _seeds(region, n: int):
    xmin, xmax, ymin, ymax = region
    if n <= 0:
        return []
    # cell centres, so seeds avoid the region boundary
    xs = [xmin + (k + 0.5) * (xmax - xmin) / n for k in range(n)]
    ys = [ymin + (k + 0.5) * (ymax - ymin) / n for k in range(n)]
    return [(x, y) for x in xs for y in ys]


def _leaf_paths(form: OneForm, region, seeds_per_axis: int, frame: _Frame) -> list[str]:
    paths = []
    for seed in _seeds(region, seeds_per_axis):
        try:
            leaf = trace_leaf(form, seed, region, PLOT_LEAF_PARAMS)
        except (FoliationSingularError, NumericNonConvergence):
            continue
        pts = np.asarray(leaf.points)
        if len(pts) < 2:
            continue
        coords = " ".join(frame(float(x), float(y)) for x, y in pts)
        paths.append(f'<polyline points="{coords}"/>')
    return paths


def _zero_set_path(p: BiPoly, region, grid: int, frame: _Frame) -> str | None:
    if p.is_constant():
        return None
    segs = zero_set_segments(squarefree_part(p), region, grid)
    if not segs:
        return None
    d = " ".join(f"M{frame(*a)} L{frame(*b)}" for a, b in sorted(segs))
    return f'<path d="{d}"/>'


def render_svg(
    web: Web,
    region=(-2.0, 2.0, -2.0, 2.0),
    seeds_per_axis: int = 6,
    grid: int = 512,
    tol: float = 1e-9,
    title: str = "",
) -> str:
    """The picture as an SVG 1.1 document; the same inputs always give the same bytes."""
    frame = _Frame(region)
    pc = polar_curve(web)
    parts = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
    ]
    if title:
        parts.append(f"<title>{escape(title)}</title>")
    w = frame.scale * (frame.xmax - frame.xmin)
    h = frame.scale * (frame.ymax - frame.ymin)
    parts.append(
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{w:.2f}" height="{h:.2f}" fill="white" stroke="black" stroke-width="1"/>'
    )
    for name, form, color in (("omega", web.omega, OMEGA_COLOR), ("eta", web.eta, ETA_COLOR)):
        parts.append(f'<g id="leaves-{name}" fill="none" stroke="{color}" stroke-width="1">')
        parts.extend(_leaf_paths(form, region, seeds_per_axis, frame))
        parts.append("</g>")
    excluded = _zero_set_path(pc.excluded, region, grid, frame)
    if excluded:
        parts.append(
            f'<g id="excluded" fill="none" stroke="{EXCLUDED_COLOR}" stroke-width="1.5" stroke-dasharray="6,4">'
        )
        parts.append(excluded)
        parts.append("</g>")
    polar = _zero_set_path(pc.f, region, grid, frame)
    parts.append(f'<g id="polar" fill="none" stroke="{POLAR_COLOR}" stroke-width="2.5">')
    if polar:
        parts.append(polar)
    parts.append("</g>")
    parts.append(f'<g id="singular" fill="black" stroke="{POLAR_COLOR}" stroke-width="1.5">')
    if not pc.f.is_constant():
        locus = find_singular_points(pc.f, region, tol, pc.excluded)
        for sp in locus.isolated:
            x, y = sp.point
            if math.isfinite(x) and math.isfinite(y):
                u, v = frame(x, y).split(",")
                parts.append(f'<circle cx="{u}" cy="{v}" r="5"/>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(path, web: Web, **kwargs) -> None:
    text = render_svg(web, **kwargs)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


__all__ = ["render_svg", "write_svg"]
