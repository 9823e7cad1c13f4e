#!/usr/bin/env python3
"""Area estimates from membership predicates alone, to check the closed forms.

Monte Carlo draws its points in fixed blocks, block k from stream k of the
seeded generator, and grid quadrature walks fixed bands of rows. Workers only
change which thread evaluates a block, and block results are integer counts,
so any worker count reproduces the sequential result bit for bit.
"""

import enum
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isfinite, sqrt
from typing import Callable, Iterable, NamedTuple

import fastlogging
import numpy as np

from arbelos import fig, geom
from arbelos.err import ChordOutOfRange, EmptyBox, InvalidOptions
from arbelos.fig import Point, Region
from arbelos.geom import ArbelosConfig
from arbelos.rng import SplitMix64

if "root" in fastlogging.domains:
    log = fastlogging.domains["root"]
else:
    log = logging.getLogger(__name__)

Predicate = Callable[[Point], object]

BLOCK = 1 << 16
CELLS_PER_BAND = 1 << 20
SIGMAS = 4.0


class Method(enum.Enum):
    MONTE_CARLO = "mc"
    GRID = "grid"


@dataclass(frozen=True)
class OracleConfig:
    method: Method = Method.MONTE_CARLO
    samples: int = 1_000_000
    grid_resolution: int = 2048
    seed: int = 42
    workers: int = 1

    def __post_init__(self):
        if self.samples < 1:
            raise InvalidOptions(f"samples={self.samples} must be at least 1")
        if self.grid_resolution < 2:
            raise InvalidOptions(
                f"grid_resolution={self.grid_resolution} must be at least 2"
            )
        if not 0 <= self.seed < 1 << 64:
            raise InvalidOptions(f"seed={self.seed} is not a 64-bit unsigned integer")
        if self.workers < 1:
            raise InvalidOptions(f"workers={self.workers} must be at least 1")


class Box(NamedTuple):
    x0: float
    y0: float
    x1: float
    y1: float

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0

    @property
    def area(self) -> float:
        return self.width * self.height


class Estimate(NamedTuple):
    value: float
    std_error: float


class RegionCheck(NamedTuple):
    region: Region
    closed_form: float
    estimate: Estimate
    discrepancy: float
    passed: bool


class VerificationReport(NamedTuple):
    config: ArbelosConfig
    oracle: OracleConfig
    checks: tuple[RegionCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def _members(predicate: Predicate, p: Point, shape: tuple) -> np.ndarray:
    # predicates may answer with a plain bool for constant regions
    return np.broadcast_to(np.asarray(predicate(p), dtype=bool), shape)


def _map(func: Callable, items: Iterable, workers: int) -> list:
    if workers == 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def _monte_carlo(predicate: Predicate, box: Box, config: OracleConfig) -> Estimate:
    gen = SplitMix64(config.seed)
    blocks = range(0, config.samples, BLOCK)

    def hits(start: int) -> int:
        count = min(BLOCK, config.samples - start)
        u = gen.stream(start // BLOCK).uniform(2 * count)
        p = Point(box.x0 + box.width * u[0::2], box.y0 + box.height * u[1::2])
        return int(np.count_nonzero(_members(predicate, p, (count,))))

    log.debug(
        f"Monte Carlo: {config.samples} samples in {len(blocks)} blocks, "
        f"{config.workers} workers"
    )
    total = sum(_map(hits, blocks, config.workers))

    fraction = total / config.samples
    return Estimate(
        value=box.area * fraction,
        std_error=box.area * sqrt(fraction * (1 - fraction) / config.samples),
    )


def _dilate(mask: np.ndarray) -> np.ndarray:
    """Grow a cell mask by one cell in all eight directions."""
    rows, cols = mask.shape
    padded = np.pad(mask, 1)
    return np.logical_or.reduce(
        [padded[i : i + rows, j : j + cols] for i in range(3) for j in range(3)]
    )


def _grid(predicate: Predicate, box: Box, config: OracleConfig) -> Estimate:
    res = config.grid_resolution
    xs = np.linspace(box.x0, box.x1, res + 1)
    ys = np.linspace(box.y0, box.y1, res + 1)
    xm, ym = (xs[:-1] + xs[1:]) / 2, (ys[:-1] + ys[1:]) / 2
    rows = max(1, CELLS_PER_BAND // res)
    bands = range(0, res, rows)

    def count(start: int) -> tuple[int, int]:
        stop = min(start + rows, res)
        # one row of halo on each side for the dilation
        lo, hi = max(start - 1, 0), min(stop + 1, res)
        mid = _members(predicate, Point(xm[None, :], ym[lo:hi, None]), (hi - lo, res))
        corner = _members(
            predicate,
            Point(xs[None, :], ys[lo : hi + 1, None]),
            (hi - lo + 1, res + 1),
        )
        quad = (corner[:-1, :-1], corner[:-1, 1:], corner[1:, :-1], corner[1:, 1:])
        inside = np.logical_and.reduce((mid, *quad))
        touched = np.logical_or.reduce((mid, *quad))
        band = slice(start - lo, stop - lo)
        straddling = _dilate(touched & ~inside)[band]
        return int(np.count_nonzero(mid[band])), int(np.count_nonzero(straddling))

    log.debug(f"Grid: {res}x{res} cells in {len(bands)} bands, {config.workers} workers")
    counts = _map(count, bands, config.workers)
    hits = sum(h for h, _ in counts)
    straddling = sum(s for _, s in counts)

    return Estimate(
        value=box.area * hits / res**2, std_error=box.area * straddling / res**2
    )


def estimate_area(predicate: Predicate, box: Box, config: OracleConfig) -> Estimate:
    """Area of the region where predicate holds, inside box."""
    if not all(map(isfinite, box)) or box.width <= 0 or box.height <= 0:
        raise EmptyBox(f"{box} has no area")

    if config.method is Method.MONTE_CARLO:
        return _monte_carlo(predicate, box, config)
    return _grid(predicate, box, config)


def tolerance(estimate: Estimate, R: float, method: Method) -> float:
    """Largest discrepancy from the closed form that still passes."""
    if method is Method.MONTE_CARLO:
        return max(SIGMAS * estimate.std_error, 1e-6 * R * R)
    return estimate.std_error + 1e-9 * R * R


def verify_config(config: ArbelosConfig, oracle: OracleConfig) -> VerificationReport:
    """Compare every closed-form area with an independent estimate."""
    if config.T <= 0:
        raise ChordOutOfRange("the oracle requires T > 0")

    figure = fig.figure_from_config(config)
    box = Box(-config.R, 0.0, config.R, config.R)
    if oracle.method is Method.GRID:
        # a smaller circle can slip between sample points unseen
        cell = box.width / oracle.grid_resolution
        if min(figure.R1, figure.R2) < cell:
            raise InvalidOptions(
                f"grid_resolution={oracle.grid_resolution} cannot resolve "
                f"radius {min(figure.R1, figure.R2)!r}, cells are {cell!r} wide"
            )
    areas = geom.area_decomposition(config)
    closed = {
        Region.KNIFE: areas.area_knife,
        Region.C1: areas.area_C1,
        Region.C2: areas.area_C2,
        Region.C: areas.area_C,
    }

    checks = []
    for region, area in closed.items():
        estimate = estimate_area(
            lambda p, region=region: fig.contains(p, region, figure), box, oracle
        )
        discrepancy = abs(area - estimate.value)
        passed = discrepancy <= tolerance(estimate, config.R, oracle.method)
        log.debug(f"{region.value}: {area!r} vs {estimate.value!r}, pass={passed}")
        checks.append(RegionCheck(region, area, estimate, discrepancy, passed))

    return VerificationReport(config, oracle, tuple(checks))
