"""Deterministic counter-based random stream (SplitMix64).

Every randomized operation in the toolkit draws from this generator so that
corpora, weights and reports are bit-reproducible across runs and platforms.
The stream is fully specified:

    out_i = mix64((seed + i * GOLDEN) mod 2**64),   i = 1, 2, 3, ...

where GOLDEN = 0x9E3779B97F4A7C15 (the 64-bit golden-ratio increment) and
mix64 is the SplitMix64 finalizer (Stafford mix 13):

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

Uniform variates are out_i / 2**64, i.e. in [0, 1).  Substreams are derived
with ``derive_seed`` so independent graphs never share a counter range.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Seed for the ``index``-th substream of ``seed`` (order-independent)."""
    return mix64((seed & _MASK64) ^ mix64(((index + 1) * GOLDEN) & _MASK64))


class CounterRng:
    """SplitMix64 counter stream; one instance per logical random object."""

    def __init__(self, seed: int):
        self._seed = seed & _MASK64
        self._i = 0

    def u64(self) -> int:
        self._i += 1
        return mix64((self._seed + self._i * GOLDEN) & _MASK64)

    def uniform(self) -> float:
        """Uniform float in [0, 1) with 64 input bits."""
        return self.u64() / 18446744073709551616.0
