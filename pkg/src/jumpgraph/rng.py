"""Seeded 64-bit generator used by the fuzz and bench harnesses.

This is splitmix64 (Steele, Lea & Flood's SplittableRandom finalizer):
state advances by the golden-ratio increment 0x9E3779B97F4A7C15 and the
output mix multiplies by 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
The constants are part of the workload-reproducibility contract: any
reimplementation that uses the same seed must generate the same workload.
"""

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Deterministic stream of 64-bit values from a single integer seed."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish value in [0, bound). Modulo bias is irrelevant at
        the bounds used here (<= 2^62 against a 64-bit stream)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def chance(self, num: int, den: int) -> bool:
        """True with probability num/den."""
        return self.below(den) < num

    def split(self) -> "SplitMix64":
        """Child generator with its own independent stream."""
        return SplitMix64(self.next_u64())
