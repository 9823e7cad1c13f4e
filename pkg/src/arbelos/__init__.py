#!/usr/bin/env python3

from .geom import ArbelosConfig, AreaReport, Radii, area_decomposition, validate_config
from .norm import Branch, DimensionlessState
