#!/usr/bin/env python3
"""Dimensionless reduction: every length divided by the circumscribing radius."""

from __future__ import annotations

import enum
import logging
from math import pi
from typing import TYPE_CHECKING, NamedTuple

import fastlogging

from arbelos import num
from arbelos.err import ParameterOutOfRange

if TYPE_CHECKING:
    from arbelos.geom import ArbelosConfig, Radii

if "root" in fastlogging.domains:
    log = fastlogging.domains["root"]
else:
    log = logging.getLogger(__name__)


class Branch(enum.Enum):
    """Root of 4·r1·(1 − r1) = t² assigned to r1."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def other(self) -> Branch:
        return Branch.MINUS if self is Branch.PLUS else Branch.PLUS


class DimensionlessState(NamedTuple):
    t: float
    r1: float
    r2: float


def normalize(config: ArbelosConfig) -> float:
    """Chord ratio t = T/R."""
    return config.T / config.R


def _root(t: float) -> float:
    if not 0 <= t <= 1 + num.CLAMP:
        raise ParameterOutOfRange(f"t={t!r} outside [0, 1]")
    return num.radical(1 - t * t, 1.0, ParameterOutOfRange)


def solve_r1(t: float, branch: Branch = Branch.PLUS) -> float:
    """Solve 4·r1·(1 − r1) = t² for r1 on the given branch."""
    s = _root(t)
    # (1 - s)/2 cancels for small t
    minus = t * t / (2 * (1 + s))
    if branch is Branch.PLUS:
        # complement keeps plus + minus == 1 bit for bit
        return 1 - minus
    return minus


def complete_state(t: float, branch: Branch = Branch.PLUS) -> DimensionlessState:
    """Return (t, r1, r2), r2 taken from the opposite root so both stay accurate."""
    r1 = solve_r1(t, branch)
    r2 = solve_r1(t, branch.other)
    if t > 1:
        log.debug(f"t={t!r} clamped to the t = 1 boundary")
        t = 1.0
    return DimensionlessState(t, r1, r2)


def denormalize(
    state: DimensionlessState, R: float
) -> tuple[ArbelosConfig, Radii]:
    """Scale a dimensionless state back to lengths for radius R."""
    from arbelos.geom import Radii, validate_config  # geom builds on this module

    config = validate_config(R, state.t * R)
    return config, Radii(state.r1 * config.R, state.r2 * config.R)


def knife_area_ratio(t: float) -> float:
    """Knife area in units of R²."""
    return pi * t * t / 4


def semicircle_area_ratios(state: DimensionlessState) -> tuple[float, float]:
    """Areas of C1 and C2 in units of R²."""
    return pi / 2 * state.r1**2, pi / 2 * state.r2**2
