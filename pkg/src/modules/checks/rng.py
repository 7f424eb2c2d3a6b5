"""SplitMix64: the seeded generator behind every randomized check.

state <- state + 0x9E3779B97F4A7C15 (mod 2^64), then the output is the state
passed through two xor-shift-multiply rounds and a final xor-shift. Identical
seeds give identical streams on every platform, which keeps check reports
byte-for-byte reproducible.
"""

from typing import List, MutableSequence, Sequence, TypeVar

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

T = TypeVar("T")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, low: int, high: int) -> int:
        """Uniform-ish integer in [low, high]; modulo reduction."""
        if high < low:
            raise ValueError(f"Empty range [{low}, {high}]")
        return low + self.next_u64() % (high - low + 1)

    def coin(self) -> bool:
        return self.next_u64() & 1 == 1

    def shuffle(self, items: MutableSequence[T]) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]

    def sample(self, population: Sequence[T], k: int) -> List[T]:
        pool = list(population)
        self.shuffle(pool)
        return pool[:k]
