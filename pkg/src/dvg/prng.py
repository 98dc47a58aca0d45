"""Deterministic pseudo-randomness for experiments.

Experiment reports must be bit-reproducible across implementations, so all
randomness comes from an explicitly specified generator instead of the
platform RNG.  The generator is xorshift64* (Vigna):

    state ^= state >> 12
    state ^= (state << 25) & (2^64 - 1)
    state ^= state >> 27
    output = (state * 0x2545F4914F6CDD1D) mod 2^64

State is seeded through one round of splitmix64 so that small consecutive
seeds give unrelated streams; a zero state is replaced by a fixed nonzero
constant.  Bounded draws use rejection sampling on the top of the 64-bit
range, so `uniform(n)` is exactly uniform on [0, n).

Per-trial streams are derived as seed_i = splitmix64(seed + i * GOLDEN)
where GOLDEN = 0x9E3779B97F4A7C15; see `derive_seed`.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(z: int) -> int:
    z = (z + GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Seed for the index-th independent stream of a seeded experiment."""
    return splitmix64((seed + index * GOLDEN) & MASK64)


class XorShift64Star:
    """xorshift64* stream with rejection-sampled bounded draws."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        state = splitmix64(seed & MASK64)
        self.state = state if state else 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def uniform(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound
