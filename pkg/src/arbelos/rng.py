#!/usr/bin/env python3
"""SplitMix64: a 64-bit counter generator small enough to port anywhere.

Output i of a generator seeded with s is mix(s + (i + 1)·GAMMA) mod 2⁶⁴, which
is the reference SplitMix64 sequence. Stream k of a generator is a new
generator seeded with output k of its parent.
"""

import numpy as np

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
M1 = 0xBF58476D1CE4E5B9
M2 = 0x94D049BB133111EB


def mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * M1) & MASK
    z = ((z ^ (z >> 27)) * M2) & MASK
    return z ^ (z >> 31)


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(M2)
    return z ^ (z >> np.uint64(31))


class SplitMix64:
    """Reproducible generator with independent sub-streams."""

    def __init__(self, seed: int) -> None:
        if not 0 <= seed <= MASK:
            raise ValueError(f"seed {seed} is not a 64-bit unsigned integer")
        self.seed = seed
        self.position = 0

    def __repr__(self) -> str:
        return f"SplitMix64(seed={self.seed:#x}, position={self.position})"

    def next_u64(self) -> int:
        self.position += 1
        return mix((self.seed + self.position * GAMMA) & MASK)

    def stream(self, index: int) -> "SplitMix64":
        """Generator k, independent of how far this one has advanced."""
        return SplitMix64(mix((self.seed + (index + 1) * GAMMA) & MASK))

    def integers(self, count: int) -> np.ndarray:
        """Next count raw 64-bit outputs."""
        counter = np.arange(
            self.position + 1, self.position + count + 1, dtype=np.uint64
        )
        self.position += count
        with np.errstate(over="ignore"):
            return _mix(np.uint64(self.seed) + counter * np.uint64(GAMMA))

    def uniform(self, count: int) -> np.ndarray:
        """Next count doubles in [0, 1) with 53 random bits each."""
        bits = self.integers(count) >> np.uint64(11)
        return bits.astype(np.float64) * 2.0**-53
