"""Deterministic random numbers for reproducible sweeps.

A 64-bit linear state with an output permutation (the splitmix64 rule):

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output = z ^ (z >> 31)

Doubles take the top 53 bits of the output, so every stream is identical
across platforms and Python versions.
"""

from __future__ import annotations

__all__ = ["SplitMix64"]

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Seeded 64-bit generator; see the module docstring for the update rule."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        """Uniform double in [lo, hi) from the top 53 bits."""
        u = self.next_u64() >> 11
        return lo + (hi - lo) * (u * 2.0**-53)

    def below(self, n: int) -> int:
        """Integer in [0, n); modulo reduction (bias is immaterial at desk scale)."""
        if n <= 0:
            raise ValueError(f"n must be positive, got {n}")
        return self.next_u64() % n

    def complex_box(self, half_width: float = 1.0) -> complex:
        """Uniform in the centered square of the given half-width (re then im)."""
        re = self.uniform(-half_width, half_width)
        im = self.uniform(-half_width, half_width)
        return complex(re, im)
