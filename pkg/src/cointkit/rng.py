"""Self-contained pseudorandom generator for reproducible simulations.

Results must be replicable across platforms and language ports, so the
generator is pinned down to fixed published constants instead of deferring
to whatever numpy ships:

* state stream: xoshiro256** (Blackman & Vigna 2018), the four 64-bit words
  seeded from one 64-bit seed via the splitmix64 mixer;
* uniforms: top 53 bits of each output word, scaled to [0, 1);
* normals: Marsaglia's polar method with the usual spare-value cache.

Python integers emulate the 64-bit wraparound arithmetic explicitly.
"""

from __future__ import annotations

_MASK = 0xFFFFFFFFFFFFFFFF
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns (output, next_state)."""
    state = (state + _SPLITMIX_GAMMA) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31), state


def derive_seed(seed: int, index: int) -> int:
    """Collision-free per-replication seed: splitmix64 output at seed + index.

    splitmix64's mixer is a bijection on 64-bit words, so distinct indices
    always map to distinct derived seeds.
    """
    out, _ = splitmix64((seed + index) & _MASK)
    return out


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


class Xoshiro256StarStar:
    """xoshiro256** stream with a splitmix64-expanded seed."""

    def __init__(self, seed: int):
        state = seed & _MASK
        words = []
        for _ in range(4):
            word, state = splitmix64(state)
            words.append(word)
        self._s = words
        self._spare: float | None = None

    def next_uint64(self) -> int:
        s0, s1, s2, s3 = self._s
        result = (_rotl((s1 * 5) & _MASK, 7) * 9) & _MASK
        t = (s1 << 17) & _MASK
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return result

    def uniform(self) -> float:
        """Uniform draw on [0, 1) with 53-bit resolution."""
        return (self.next_uint64() >> 11) * (2.0**-53)

    def normal(self) -> float:
        """Standard normal draw via the polar method."""
        if self._spare is not None:
            value, self._spare = self._spare, None
            return value
        from math import log, sqrt
        while True:
            u = 2.0 * self.uniform() - 1.0
            v = 2.0 * self.uniform() - 1.0
            s = u * u + v * v
            if 0.0 < s < 1.0:
                factor = sqrt(-2.0 * log(s) / s)
                self._spare = v * factor
                return u * factor

    def normals(self, n: int) -> list[float]:
        return [self.normal() for _ in range(n)]
