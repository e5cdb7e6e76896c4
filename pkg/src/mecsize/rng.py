"""Deterministic counter-based pseudo-random generator.

Sample streams are part of the package's external contract: the same seed
must yield the same DAG samples on every platform and Python version. The
stdlib Mersenne Twister would work today, but its convenience methods make
no cross-version promise, so we pin a tiny, fully documented generator
instead: SplitMix64.

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state
    z <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z <- (z XOR (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output <- z XOR (z >> 31)

Integers below a bound are drawn by rejection on the minimal number of
bits, which keeps every draw exactly uniform — required because root
selection works with arbitrary-precision class sizes where any float
rounding would bias the sampler.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Derive the sub-stream seed for draw `index` of a batch run.

    Defined as splitmix64_mix(seed * 2^32 + index + 1) so independent draws
    can be produced concurrently and still match sequential output.
    """
    return _mix(((seed & MASK64) * (1 << 32) + index + 1) & MASK64)


class SplitMix64:
    """SplitMix64 stream seeded with an arbitrary Python integer."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & MASK64
        return _mix(self._state)

    def below(self, n: int) -> int:
        """Exactly uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("bound must be positive")
        k = (n - 1).bit_length()
        if k == 0:
            return 0
        while True:
            r = self.bits(k)
            if r < n:
                return r

    def bits(self, k: int) -> int:
        """k uniform random bits as a nonnegative integer."""
        out = 0
        got = 0
        while got < k:
            out = (out << 64) | self.next_u64()
            got += 64
        return out >> (got - k)

    def shuffle(self, xs: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(xs) - 1, 0, -1):
            j = self.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]

    def choice(self, xs):
        return xs[self.below(len(xs))]
