"""Deterministic random source used by every stochastic operation.

The generator is splitmix64 (Steele, Lea & Flood 2014): a counter-based
construction with 64 bits of state whose k-th output is a fixed avalanche
mix of ``seed + k*GOLDEN``.  Being counter-based makes it trivially
seekable and lets large blocks of outputs be produced with vectorized
uint64 arithmetic while staying bit-identical to the scalar stream.
Statistical quality is more than sufficient for simulation; this is not a
cryptographic generator and is not meant to be one.
"""

from __future__ import annotations

import math

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

_NP_GOLDEN = np.uint64(GOLDEN)
_NP_M1 = np.uint64(0xBF58476D1CE4E5B9)
_NP_M2 = np.uint64(0x94D049BB133111EB)


def mix64(z: int) -> int:
    """Scalar splitmix64 finalizer: avalanche a 64-bit value."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _mix64_block(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _NP_M1
    z = (z ^ (z >> np.uint64(27))) * _NP_M2
    return z ^ (z >> np.uint64(31))


class RandomSource:
    """Seekable deterministic stream of 32/64-bit integers and derived reals.

    Same seed, same platform-independent bit-exact output sequence.  The
    block methods return exactly the values the scalar ``next_*`` calls
    would, and advance the stream identically.
    """

    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self._counter = 0

    def __repr__(self):
        return f"RandomSource(seed={self.seed:#x}, counter={self._counter})"

    def next_u64(self) -> int:
        self._counter += 1
        return mix64((self.seed + self._counter * GOLDEN) & MASK64)

    def next_u32(self) -> int:
        # High half of the 64-bit output; better mixed than the low half.
        return self.next_u64() >> 32

    def skip(self, n: int) -> None:
        """Advance the stream by n draws without producing them."""
        if n < 0:
            raise ValueError("cannot skip backwards")
        self._counter += n

    def derive(self, key: int) -> "RandomSource":
        """Independent child stream; deterministic in (seed, key).

        Does not consume or disturb this source's own stream.
        """
        return RandomSource(mix64(self.seed ^ mix64((key + 1) * GOLDEN)))

    def u64_block(self, n: int) -> np.ndarray:
        """Next n outputs as a uint64 array (identical to n next_u64 calls)."""
        idx = np.arange(self._counter + 1, self._counter + n + 1, dtype=np.uint64)
        self._counter += n
        with np.errstate(over="ignore"):
            return _mix64_block(np.uint64(self.seed) + idx * _NP_GOLDEN)

    def u32_block(self, n: int) -> np.ndarray:
        return (self.u64_block(n) >> np.uint64(32)).astype(np.uint64)

    def uniform_block(self, n: int, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
        """n float64 values uniform on [lo, hi)."""
        u = (self.u64_block(n) >> np.uint64(11)).astype(np.float64) * 2.0**-53
        return lo + u * (hi - lo)

    def normal_block(self, n: int, sigma: float = 1.0) -> np.ndarray:
        """n float64 values from N(0, sigma^2), via Box-Muller."""
        if sigma == 0.0:
            # still consume the draws so layouts stay seed-aligned
            self.skip(2 * ((n + 1) // 2))
            return np.zeros(n)
        m = (n + 1) // 2
        raw = self.u64_block(2 * m) >> np.uint64(11)
        # (0,1) exclusive on both ends so log() is finite
        u = (raw.astype(np.float64) + 0.5) * 2.0**-53
        r = np.sqrt(-2.0 * np.log(u[:m]))
        theta = (2.0 * math.pi) * u[m:]
        z = np.concatenate([r * np.cos(theta), r * np.sin(theta)])
        return sigma * z[:n]

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (inclusive).

        Uses the multiply-shift reduction; the bias is below 2**-32 for
        the span sizes used here.
        """
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        return lo + ((self.next_u64() * span) >> 64)


class ScriptedSource:
    """Replays a fixed list of 32-bit draws; a first-class test fixture.

    Useful for stepping algorithms through hand-computed examples.  An
    optional fallback source serves draws after the script is exhausted.
    """

    def __init__(self, values, fallback: RandomSource | None = None):
        self._values = [v & 0xFFFFFFFF for v in values]
        self._pos = 0
        self._fallback = fallback

    def next_u32(self) -> int:
        if self._pos < len(self._values):
            v = self._values[self._pos]
            self._pos += 1
            return v
        if self._fallback is not None:
            return self._fallback.next_u32()
        raise IndexError("scripted source exhausted")

    @property
    def remaining(self) -> int:
        return len(self._values) - self._pos
