#!/usr/bin/env python3
"""Coordinate construction of the Arbelos figure.

O sits at the origin with AB on the x-axis, A to the left. N is given by its
signed offset n from O, so P = (n, √(R² − n²)) and T² = R² − n².

Membership predicates use numpy operations only, so a Point whose coordinates
are arrays tests every sample at once.
"""

import enum
from math import atan2, isfinite, pi, sqrt
from typing import NamedTuple, Union

import numpy as np

from arbelos import num
from arbelos.err import DegenerateTriangle, NonPositiveRadius, PointOffDiameter
from arbelos.geom import ArbelosConfig
from arbelos.norm import Branch

Coord = Union[float, np.ndarray]


class Point(NamedTuple):
    x: Coord
    y: Coord


class Region(enum.Enum):
    C = "C"
    C1 = "C1"
    C2 = "C2"
    KNIFE = "knife"


class Figure(NamedTuple):
    A: Point
    B: Point
    N: Point
    P: Point
    O: Point
    R: float
    R1: float
    R2: float
    T: float

    @property
    def center1(self) -> Point:
        return Point((self.A.x + self.N.x) / 2, 0.0)

    @property
    def center2(self) -> Point:
        return Point((self.N.x + self.B.x) / 2, 0.0)

    def disk(self, which: Region) -> tuple[Point, float]:
        """Center and radius of a semicircle."""
        if which is Region.C:
            return self.O, self.R
        if which is Region.C1:
            return self.center1, self.R1
        if which is Region.C2:
            return self.center2, self.R2
        raise ValueError(f"{which} is not a semicircle")


def build_figure(R: float, n: float) -> Figure:
    """Erect the perpendicular to AB at N and meet the large semicircle in P."""
    R, n = float(R), float(n)
    if not isfinite(R) or R <= 0:
        raise NonPositiveRadius(f"R={R!r} must be finite and positive")
    if not isfinite(n) or not num.between(n, -R, R):
        raise PointOffDiameter(f"n={n!r} outside [-R, R] for R={R!r}")

    # (R - n)(R + n) keeps precision when N is near an endpoint
    T = sqrt((R - n) * (R + n))
    return Figure(
        A=Point(-R, 0.0),
        B=Point(R, 0.0),
        N=Point(n, 0.0),
        P=Point(n, T),
        O=Point(0.0, 0.0),
        R=R,
        R1=(R + n) / 2,
        R2=(R - n) / 2,
        T=T,
    )


def figure_from_config(config: ArbelosConfig, branch: Branch = Branch.PLUS) -> Figure:
    """Place N so the A-side semicircle is the larger one on the plus branch."""
    s = num.radical(config.R**2 - config.T**2, config.R**2)
    return build_figure(config.R, s if branch is Branch.PLUS else -s)


def verify_right_angle(figure: Figure) -> float:
    """Deviation of the angle APB from a right angle, in radians."""
    ux, uy = figure.A.x - figure.P.x, figure.A.y - figure.P.y
    vx, vy = figure.B.x - figure.P.x, figure.B.y - figure.P.y
    if min(np.hypot(ux, uy), np.hypot(vx, vy)) <= num.ABS * figure.R:
        raise DegenerateTriangle(f"P={tuple(figure.P)} coincides with A or B")

    angle = atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)
    return abs(angle - pi / 2)


def verify_geometric_mean(figure: Figure) -> float:
    """Residual of PN² = AN·NB."""
    an = abs(figure.N.x - figure.A.x)
    nb = abs(figure.B.x - figure.N.x)
    return abs(figure.T**2 - an * nb)


def verify_pythagoras(figure: Figure) -> float:
    """Residual of AB² = AN² + NB² + 2·PN²."""
    an = abs(figure.N.x - figure.A.x)
    nb = abs(figure.B.x - figure.N.x)
    ab = figure.B.x - figure.A.x
    return abs(ab**2 - (an**2 + nb**2 + 2 * figure.T**2))


def _inside(p: Point, center: Point, radius: float):
    return (p.x - center.x) ** 2 + (p.y - center.y) ** 2 < radius * radius


def in_semicircle(p: Point, which: Region, figure: Figure):
    """Strict interior of the upper half of the selected disk."""
    center, radius = figure.disk(which)
    return (p.y > 0) & _inside(p, center, radius)


def in_knife(p: Point, figure: Figure):
    """Inside C and outside the closed disks of C1 and C2."""
    inner = _inside_closed(p, figure.center1, figure.R1) | _inside_closed(
        p, figure.center2, figure.R2
    )
    return np.logical_and(in_semicircle(p, Region.C, figure), np.logical_not(inner))


def _inside_closed(p: Point, center: Point, radius: float):
    return (p.x - center.x) ** 2 + (p.y - center.y) ** 2 <= radius * radius


def contains(p: Point, which: Region, figure: Figure):
    """Membership test for any region, knife included."""
    if which is Region.KNIFE:
        return in_knife(p, figure)
    return in_semicircle(p, which, figure)
