#!/usr/bin/env python3


class ArbelosError(ValueError):
    """Invalid input to an Arbelos computation."""


class NonPositiveRadius(ArbelosError):
    """Circumscribing radius is not a finite positive number."""


class ChordOutOfRange(ArbelosError):
    """Chord is negative, longer than the radius, or not finite."""


class NegativeRadius(ArbelosError):
    """Inscribed radius is negative."""


class ParameterOutOfRange(ArbelosError):
    """Dimensionless chord ratio outside [0, 1]."""


class PointOffDiameter(ArbelosError):
    """Division point N lies outside the diameter AB."""


class DegenerateTriangle(ArbelosError):
    """P coincides with A or B, the angle at P is undefined."""


class EmptyBox(ArbelosError):
    """Bounding box has no area."""


class InvalidOptions(ArbelosError):
    """Rejected oracle or render options."""
