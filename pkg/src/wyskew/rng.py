"""Small deterministic PRNG.

SplitMix64 for the integer stream, 53-bit mantissa for uniforms and the
Box-Muller transform for Gaussians. Everything is spelled out so the same
seed yields the same numbers in any language that implements these three
steps. The generator is an ordinary object owned by the caller.
"""

from __future__ import annotations

import math

import numpy as np

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & _MASK64
        self._spare: float | None = None

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def normal(self) -> float:
        """Standard normal deviate (Box-Muller, cosine branch first)."""
        if self._spare is not None:
            z, self._spare = self._spare, None
            return z
        u1 = 1.0 - self.uniform()  # (0, 1], keeps log finite
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        self._spare = r * math.sin(2.0 * math.pi * u2)
        return r * math.cos(2.0 * math.pi * u2)

    def normals(self, shape) -> np.ndarray:
        size = int(np.prod(shape))
        return np.array([self.normal() for _ in range(size)]).reshape(shape)

    def complex_normals(self, shape) -> np.ndarray:
        """Complex Gaussian array; real part drawn before imaginary part per entry."""
        size = int(np.prod(shape))
        flat = np.array([self.normal() for _ in range(2 * size)])
        return (flat[0::2] + 1j * flat[1::2]).reshape(shape)

    def integers(self, low: int, high: int) -> int:
        """Integer in [low, high]."""
        return low + int(self.uniform() * (high - low + 1))

    def unit_vector(self, dim: int = 3) -> np.ndarray:
        while True:
            v = self.normals(dim)
            norm = float(np.linalg.norm(v))
            if norm > 1e-8:
                return v / norm


def as_rng(seed_or_rng) -> SplitMix64:
    if isinstance(seed_or_rng, SplitMix64):
        return seed_or_rng
    return SplitMix64(int(seed_or_rng))
