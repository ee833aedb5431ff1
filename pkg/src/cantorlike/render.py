"""Deterministic SVG rendering of construction stages.

Mirrors the usual iteration diagrams: stage 0 on top, one row per stage,
each surviving closed interval drawn as a filled rectangle. Output is a
pure function of the inputs, so identical calls give byte-identical SVG.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import DEFAULT_DEPTH_CAP, FamilySpec, iterate


@dataclass(frozen=True)
class RenderSpec:
    family: FamilySpec
    depth: int
    width_px: int = 800
    row_height_px: int = 28

    def __post_init__(self) -> None:
        if self.width_px <= 0 or self.row_height_px <= 0:
            raise ValueError("pixel dimensions must be positive")
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def render_svg(spec: RenderSpec, depth_cap: int = DEFAULT_DEPTH_CAP) -> str:
    width = spec.width_px
    row_h = spec.row_height_px
    bar_h = max(row_h - 6, 1)
    height = (spec.depth + 1) * row_h
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for stage in range(spec.depth + 1):
        y = stage * row_h
        for interval in iterate(spec.family, stage, depth_cap=depth_cap):
            x = float(interval.a) * width
            w = max(float(interval.length) * width, 1.0)  # keep degenerate points visible
            parts.append(
                f'<rect x="{_fmt(x)}" y="{y}" width="{_fmt(w)}" height="{bar_h}" fill="#1f2430"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
