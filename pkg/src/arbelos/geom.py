#!/usr/bin/env python3
"""Closed-form areas of the Arbelos and the chord-radii relations."""

import logging
from dataclasses import dataclass
from math import isfinite, pi, sqrt
from typing import NamedTuple

import fastlogging

from arbelos import norm
from arbelos.err import ChordOutOfRange, NegativeRadius, NonPositiveRadius
from arbelos.norm import Branch

if "root" in fastlogging.domains:
    log = fastlogging.domains["root"]
else:
    log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArbelosConfig:
    """Circumscribing radius R and chord PN of length T, 0 <= T <= R."""

    R: float
    T: float


class Radii(NamedTuple):
    R1: float
    R2: float


class AreaReport(NamedTuple):
    area_C: float
    area_C1: float
    area_C2: float
    area_knife: float

    def scaled(self, factor: float) -> "AreaReport":
        return AreaReport(*(factor * area for area in self))


def validate_config(R: float, T: float) -> ArbelosConfig:
    """Check raw inputs against R > 0 and 0 <= T <= R."""
    R, T = float(R), float(T)
    if not isfinite(R) or R <= 0:
        raise NonPositiveRadius(f"R={R!r} must be finite and positive")
    if not isfinite(T) or not 0 <= T <= R:
        raise ChordOutOfRange(f"T={T!r} outside [0, R={R!r}]")
    if T == 0:
        log.debug("degenerate configuration: C2 vanishes")
    return ArbelosConfig(R, T)


def semicircle_area(radius: float) -> float:
    return pi / 2 * radius * radius


def knife_area(config: ArbelosConfig) -> float:
    """Area of the region between the three semicircles, πT²/4."""
    return pi * config.T * config.T / 4


def area_knife_from_radii(R1: float, R2: float) -> float:
    """Knife area as π·R1·R2, before substituting T² = 4·R1·R2."""
    return pi * R1 * R2


def chord_from_radii(R1: float, R2: float) -> float:
    """Length of PN from the inscribed radii, 2·√(R1·R2)."""
    if R1 < 0 or R2 < 0:
        raise NegativeRadius(f"R1={R1!r}, R2={R2!r}")
    return 2 * sqrt(R1 * R2)


def radii_from_chord(config: ArbelosConfig, branch: Branch = Branch.PLUS) -> Radii:
    """Inscribed radii for chord T; the plus branch puts the larger one first."""
    state = norm.complete_state(norm.normalize(config), branch)
    return Radii(state.r1 * config.R, state.r2 * config.R)


def squares_identity(config: ArbelosConfig, radii: Radii) -> float:
    """Residual of R1² + R2² = R² − 2·R1·R2."""
    R1, R2 = radii
    return abs(R1 * R1 + R2 * R2 - (config.R * config.R - 2 * R1 * R2))


def semicircle_areas(config: ArbelosConfig) -> tuple[float, float]:
    """Areas of C1 and C2 from R and T alone, larger first."""
    R1, R2 = radii_from_chord(config, Branch.PLUS)
    return semicircle_area(R1), semicircle_area(R2)


def area_decomposition(config: ArbelosConfig) -> AreaReport:
    """A(C) split into A(C1) + A(C2) + A(knife)."""
    area_C1, area_C2 = semicircle_areas(config)
    return AreaReport(
        area_C=semicircle_area(config.R),
        area_C1=area_C1,
        area_C2=area_C2,
        area_knife=knife_area(config),
    )
