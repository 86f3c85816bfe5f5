"""Seeded randomness with a fixed cross-platform algorithm.

The generator is SplitMix64 (Steele, Lea & Flood's mix64 variant 13 over
a Weyl sequence with increment 0x9E3779B97F4A7C15): 64 bits of state, one
multiply-xorshift avalanche per output word. Identical seeds produce
identical streams on every platform because all arithmetic is integral.

Stream splitting: every parallel unit of work (one instance, one sampled
colouring) gets its own generator via ``derive(root_seed, index, ...)``,
never a shared stream, so results are independent of worker scheduling
and of the number of workers.

Bernoulli draws take exact ``Fraction`` probabilities and compare a
uniform real against them 16 bits at a time, escalating on the boundary
window, so densities like 1/5 are hit exactly rather than through a
float threshold.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer: avalanche a 64-bit word."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive(seed: int, *keys: int) -> int:
    """Deterministically derive a sub-stream seed from a root seed and a
    key path, e.g. derive(root, instance_index)."""
    s = mix64(seed)
    for k in keys:
        s = mix64((s + _GAMMA) ^ mix64(k))
    return s


class SplitMix64:
    """The harness RNG. 64-bit state; see the module docstring."""

    __slots__ = ("state", "_buf", "_bufbits")

    def __init__(self, seed: int):
        self.state = seed & _MASK
        self._buf = 0
        self._bufbits = 0

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        return mix64(self.state)

    def bits(self, k: int) -> int:
        """A uniform k-bit integer (buffered, so small draws do not burn
        a full word each)."""
        while self._bufbits < k:
            self._buf |= self.next_u64() << self._bufbits
            self._bufbits += 64
        out = self._buf & ((1 << k) - 1)
        self._buf >>= k
        self._bufbits -= k
        return out

    def randrange(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        k = (bound - 1).bit_length()
        while True:
            r = self.bits(k) if k else 0
            if r < bound:
                return r

    def bernoulli(self, p: Fraction) -> bool:
        """True with probability exactly p (a Fraction in [0, 1])."""
        num, den = p.numerator, p.denominator
        if num <= 0:
            if num < 0:
                raise ValueError("probability below 0")
            return False
        if num >= den:
            if num > den:
                raise ValueError("probability above 1")
            return True
        # Compare a uniform real U < num/den, 16 bits of U at a time:
        # draw v, decide if the window [v, v+1)/2^16 is entirely below or
        # above the target, otherwise zoom into the window and repeat.
        while True:
            v = self.bits(16)
            num <<= 16
            lo = v * den
            if num <= lo:
                return False
            if num >= lo + den:
                return True
            num -= lo

    def shuffle(self, seq: list) -> None:
        """In-place Fisher-Yates; every permutation equiprobable."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.randrange(i + 1)
            seq[i], seq[j] = seq[j], seq[i]
