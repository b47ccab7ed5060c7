"""Portable 64-bit PRNG used by the question generators.

Banks must be reproducible bit-for-bit across platforms and language
runtimes, so generation never touches ``random`` from the stdlib.  The
generator is splitmix64 (Steele, Lea & Flood's mixing constants); the
child-seed derivation below is part of the bank format and must not
change once banks are published.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1

_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def mix64(x: int) -> int:
    """splitmix64 finalizer: a bijective avalanche over 64-bit ints."""
    x &= _MASK
    x = ((x ^ (x >> 30)) * _MIX1) & _MASK
    x = ((x ^ (x >> 27)) * _MIX2) & _MASK
    return x ^ (x >> 31)


def fnv1a64(text: str) -> int:
    h = _FNV_OFFSET
    for b in text.encode("utf-8"):
        h = ((h ^ b) * _FNV_PRIME) & _MASK
    return h


def child_seed(master: int, kind: str, ordinal: int, attempt: int) -> int:
    """Derive the seed for one generation attempt.

    Chained finalizer calls keep retry streams independent: bumping the
    attempt reshuffles everything instead of sliding along one stream.
    """
    x = mix64(master ^ fnv1a64(kind))
    x = mix64(x ^ (ordinal & _MASK))
    x = mix64(x ^ (attempt & _MASK))
    return x


class SplitMix64:
    """Deterministic stream of 64-bit values with the usual draw helpers."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return mix64(self._state)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), rejection-sampled to avoid modulo bias."""
        if n <= 0:
            raise ValueError("randrange() bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.randrange(hi - lo + 1)

    def chance(self, p: float) -> bool:
        """True with probability p (p is clamped to [0, 1])."""
        if p <= 0.0:
            return False
        if p >= 1.0:
            return True
        return self.next_u64() < int(p * 2.0**64)

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
