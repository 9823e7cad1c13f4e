#!/usr/bin/env python3
"""Standalone SVG drawing of the Arbelos construction."""

from dataclasses import dataclass
from math import isfinite
from typing import NamedTuple

from arbelos.err import InvalidOptions
from arbelos.fig import Figure, Point

ELIDE = 1e-9

# label offsets in pixels, SVG y axis pointing down
OFFSETS = {
    "A": (-14.0, 16.0),
    "B": (4.0, 16.0),
    "N": (4.0, 16.0),
    "P": (4.0, -6.0),
    "O": (-12.0, 16.0),
}


@dataclass(frozen=True)
class RenderOptions:
    canvas_width: float = 400.0
    margin: float = 20.0
    shade_knife: bool = False
    show_labels: bool = True
    stroke_width: float = 1.5

    def __post_init__(self):
        for name in ("canvas_width", "margin", "stroke_width"):
            if not isfinite(getattr(self, name)):
                raise InvalidOptions(f"{name}={getattr(self, name)} is not finite")
        if self.margin < 0 or self.canvas_width <= 2 * self.margin:
            raise InvalidOptions(
                f"canvas_width={self.canvas_width} must exceed twice margin={self.margin}"
            )
        if self.stroke_width <= 0:
            raise InvalidOptions(f"stroke_width={self.stroke_width} must be positive")


class Transform(NamedTuple):
    """Map the y-up figure frame onto the y-down canvas."""

    R: float
    scale: float
    margin: float

    @classmethod
    def fit(cls, figure: Figure, options: RenderOptions) -> "Transform":
        scale = (options.canvas_width - 2 * options.margin) / (2 * figure.R)
        return cls(figure.R, scale, options.margin)

    @property
    def height(self) -> float:
        return 2 * self.margin + self.R * self.scale

    def to_canvas(self, p: Point) -> tuple[float, float]:
        return (
            self.margin + (p.x + self.R) * self.scale,
            self.margin + (self.R - p.y) * self.scale,
        )

    def to_figure(self, x: float, y: float) -> Point:
        return Point(
            (x - self.margin) / self.scale - self.R,
            self.R - (y - self.margin) / self.scale,
        )


def fmt(value: float) -> str:
    return f"{value:.6f}"


def _xy(transform: Transform, p: Point) -> str:
    return " ".join(map(fmt, transform.to_canvas(p)))


def _arcs(figure: Figure) -> list[tuple[str, Point, Point, float]]:
    """Upper semicircles that are not degenerate, left end to right end."""
    arcs = [
        ("C", figure.A, figure.B, figure.R),
        ("C1", figure.A, figure.N, figure.R1),
        ("C2", figure.N, figure.B, figure.R2),
    ]
    return [arc for arc in arcs if arc[3] >= ELIDE * figure.R]


def _knife(figure: Figure, transform: Transform) -> str:
    """Outline C left to right, then come back under C2 and C1."""
    r = fmt(figure.R * transform.scale)
    d = [
        f"M {_xy(transform, figure.A)}",
        f"A {r} {r} 0 0 1 {_xy(transform, figure.B)}",
    ]
    for _, start, _, radius in reversed(_arcs(figure)[1:]):
        r = fmt(radius * transform.scale)
        d.append(f"A {r} {r} 0 0 0 {_xy(transform, start)}")
    d.append("Z")
    return " ".join(d)


def render_figure(figure: Figure, options: RenderOptions = RenderOptions()) -> str:
    """SVG 1.1 document text, byte-identical for identical inputs."""
    transform = Transform.fit(figure, options)
    width, height = fmt(options.canvas_width), fmt(transform.height)
    stroke = f'stroke="black" stroke-width="{fmt(options.stroke_width)}"'

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
    ]

    if options.shade_knife:
        lines.append(
            f'  <path class="knife" d="{_knife(figure, transform)}" '
            'fill="#cccccc" fill-rule="evenodd" stroke="none"/>'
        )

    for name, start, end, radius in _arcs(figure):
        r = fmt(radius * transform.scale)
        d = f"M {_xy(transform, start)} A {r} {r} 0 0 1 {_xy(transform, end)}"
        lines.append(f'  <path class="arc" id="{name}" d="{d}" fill="none" {stroke}/>')

    for name, start, end in (("AB", figure.A, figure.B), ("PN", figure.P, figure.N)):
        (x1, y1), (x2, y2) = transform.to_canvas(start), transform.to_canvas(end)
        lines.append(
            f'  <line class="segment" id="{name}" x1="{fmt(x1)}" y1="{fmt(y1)}" '
            f'x2="{fmt(x2)}" y2="{fmt(y2)}" {stroke}/>'
        )

    if options.show_labels:
        for name, (dx, dy) in OFFSETS.items():
            x, y = map(fmt, transform.to_canvas(getattr(figure, name)))
            lines.append(
                f'  <circle class="point" cx="{x}" cy="{y}" '
                f'r="{fmt(2 * options.stroke_width)}" fill="black"/>'
            )
            lines.append(
                f'  <text class="label" x="{x}" y="{y}" dx="{fmt(dx)}" dy="{fmt(dy)}" '
                f'font-family="serif" font-size="14">{name}</text>'
            )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
