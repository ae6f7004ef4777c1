"""
Synthetic approval profiles.

Randomness comes from numpy's Philox counter-based generator. Profile ``index``
of a dataset with seed ``s`` uses ``Philox(key=s).jumped(index)``, so each
profile depends only on (seed, index).
"""

import numpy as np

from abcratio.core import ParameterError, Profile

_KEY_MASK = (1 << 64) - 1


def _rng(seed, stream=0):
    if not isinstance(seed, (int, np.integer)):
        raise ParameterError(f"seed must be an integer, got {seed!r}")
    bitgen = np.random.Philox(key=int(seed) & _KEY_MASK)
    if stream:
        bitgen = bitgen.jumped(stream)
    return np.random.Generator(bitgen)


def sample_ballots(rng, m, n, ballot_size_range):
    lo, hi = ballot_size_range
    sizes = rng.integers(lo, hi + 1, size=n)
    return [rng.choice(m, size=int(s), replace=False).tolist() for s in sizes]


def gen_uniform_profile(seed, m=20, n=50, ballot_size_range=(2, 5), stream=0):
    """
    Profile whose voters draw a ballot size uniformly from
    ``ballot_size_range`` (inclusive) and then a uniform subset of that size.
    """
    lo, hi = ballot_size_range
    if m < 1 or n < 1:
        raise ParameterError(f"m and n must be positive (m={m}, n={n})")
    if not 1 <= lo <= hi <= m:
        raise ParameterError(f"ballot size range [{lo}, {hi}] must lie within [1, m={m}]")
    rng = _rng(seed, stream)
    return Profile(m, sample_ballots(rng, m, n, (lo, hi)))


def uniform_dataset(seed, count, m=20, n=50, ballot_size_range=(2, 5)):
    """``count`` independent uniform profiles (streams 0..count-1)."""
    return [gen_uniform_profile(seed, m, n, ballot_size_range, stream=i) for i in range(count)]
