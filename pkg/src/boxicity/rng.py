"""Seeded, portable random streams.

Every randomized routine in the package takes an :class:`Rng` explicitly.
Streams are PCG64 seeded through ``numpy.random.SeedSequence``; both are
stream-stable across numpy releases and platforms. Bounded integers and
shuffles are derived here from raw 64-bit outputs instead of going through
``numpy.random.Generator``, whose sampling methods carry no cross-version
stream guarantee.
"""

from __future__ import annotations

from typing import MutableSequence

import numpy as np

_MASK64 = (1 << 64) - 1
_BUFFER = 256


class Rng:
    """A 64-bit seeded generator with optional substream keys.

    ``Rng(seed, 3, 1)`` and ``Rng(seed, 3, 2)`` are independent streams; the
    same arguments always reproduce the same stream.
    """

    def __init__(self, seed: int, *keys: int) -> None:
        if not 0 <= seed <= _MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        if any(k < 0 for k in keys):
            raise ValueError("substream keys must be non-negative")
        self.seed = seed
        self.keys = tuple(keys)
        ss = np.random.SeedSequence(entropy=seed, spawn_key=self.keys)
        self._bits = np.random.PCG64(ss)
        self._buf: list[int] = []

    def substream(self, *keys: int) -> "Rng":
        return Rng(self.seed, *self.keys, *keys)

    def raw(self) -> int:
        """Next raw 64-bit output."""
        if not self._buf:
            self._buf = self._bits.random_raw(_BUFFER).tolist()
            self._buf.reverse()
        return self._buf.pop()

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``, unbiased (modulo with rejection)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        if bound == 1:
            return 0
        if bound > _MASK64 + 1:
            raise ValueError("bound exceeds 2**64")
        # accepted range [threshold, 2**64) has a size divisible by bound
        threshold = (1 << 64) % bound
        while True:
            x = self.raw()
            if x >= threshold:
                return x % bound

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return (self.raw() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, seq: MutableSequence) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def __repr__(self) -> str:
        return f"Rng(seed={self.seed}, keys={self.keys})"
