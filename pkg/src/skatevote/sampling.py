"""Seeded random elections on a portable PRNG.

The generator is SplitMix64 (Steele/Lea/Flood's fixed-increment variant):
state steps by the golden-ratio constant and the output is a two-round
xor-shift multiply finalizer.  It is a dozen lines, passes BigCrush, and
reproduces bit-for-bit in any language, which is the point: corpora sampled
here are identified by (seed, bounds) alone.  Uniform ranges use rejection
sampling, shuffles are Fisher-Yates from the top; both are part of the
reproducibility contract, so do not swap in stdlib equivalents.
"""

from __future__ import annotations

from .election import Ballot, Election

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform int in [0, n); unbiased via rejection."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        limit = _MASK + 1 - ((_MASK + 1) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform int in [lo, hi], both ends included."""
        return lo + self.randrange(hi - lo + 1)

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, seq) -> tuple:
        items = list(seq)
        self.shuffle(items)
        return tuple(items)


def candidate_names(m: int) -> tuple[str, ...]:
    if not 1 <= m <= 26:
        raise ValueError("supported candidate counts are 1..26")
    return tuple(_ALPHABET[:m])


def random_ballot(rng: SplitMix64, candidates, max_weight: int = 1) -> Ballot:
    weight = 1 if max_weight <= 1 else rng.randint(1, max_weight)
    return Ballot(rng.permutation(candidates), weight)


def random_election(
    rng: SplitMix64,
    max_m: int,
    max_n: int,
    max_weight: int = 1,
    min_m: int = 1,
    min_n: int = 1,
) -> Election:
    """Candidate count, ballot count, rankings, and weights all uniform
    within the given bounds."""
    m = rng.randint(min_m, max_m)
    n = rng.randint(min_n, max_n)
    cands = candidate_names(m)
    ballots = tuple(random_ballot(rng, cands, max_weight) for _ in range(n))
    return Election(cands, ballots).check()
