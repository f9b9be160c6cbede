"""Deterministic random sampling.

All randomized checks in this package draw from a single 64-bit seed
through a counter-based generator (splitmix64), so any run is
byte-for-byte reproducible on every platform.  The generator is six lines
of integer arithmetic; platform float quirks and library version drift
cannot touch it.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1


class SplitMix64:
    """Counter-based 64-bit generator (splitmix64 mixing function)."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (unbiased enough for test sampling)."""
        span = hi - lo + 1
        return lo + self.next_u64() % span

    def rational(self, num_bound: int = 9, den_bound: int = 4) -> Fraction:
        """Small random rational; numerators in [-num_bound, num_bound]."""
        return Fraction(self.randint(-num_bound, num_bound),
                        self.randint(1, den_bound))

    def rationals(self, n: int, num_bound: int = 9, den_bound: int = 4) -> "list[Fraction]":
        return [self.rational(num_bound, den_bound) for _ in range(n)]

    def nonzero_rational(self, num_bound: int = 9, den_bound: int = 4) -> Fraction:
        while True:
            r = self.rational(num_bound, den_bound)
            if r != 0:
                return r
