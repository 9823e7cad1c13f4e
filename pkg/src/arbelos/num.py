#!/usr/bin/env python3

from math import isclose, sqrt
from typing import Type

from arbelos.err import ArbelosError

REL = 1e-12
ABS = 1e-15
CLAMP = 1e-12


def approx(a: float, b: float, rel: float = REL, abs: float = ABS) -> bool:
    """Handle numbers close to 0 in math.isclose()."""
    return isclose(a, b, rel_tol=rel, abs_tol=abs)


def between(value: float, a: float, b: float) -> bool:
    """Check if value is between unknown numbers a and b."""
    return (value - a) * (value - b) <= 0


def radical(
    value: float, scale: float, exc: Type[ArbelosError] = ArbelosError
) -> float:
    """Square root of a radicand that rounding may push slightly below 0."""
    if value < 0:
        if value < -CLAMP * scale:
            raise exc(f"negative radicand {value!r} at scale {scale!r}")
        value = 0.0
    return sqrt(value)
