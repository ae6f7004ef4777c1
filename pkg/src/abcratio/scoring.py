"""
Exact committee scores: AV, CC, PAV, p-geometric and Monroe.

All scores are :class:`fractions.Fraction` values.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from abcratio._flow import max_flow
from abcratio.core import DomainError, bits


@lru_cache(maxsize=None)
def _harmonic_table(k_max):
    table = [Fraction(0)]
    for t in range(1, k_max + 1):
        table.append(table[-1] + Fraction(1, t))
    return tuple(table)


def harmonic(t):
    """The t-th harmonic number H(t) = 1 + 1/2 + ... + 1/t, with H(0) = 0."""
    if t < 0:
        raise DomainError("harmonic numbers are defined for t >= 0")
    return _harmonic_table(max(t, 16))[t]


def harmonic_table(k_max):
    """Tuple (H(0), ..., H(k_max)) of exact harmonic numbers."""
    return _harmonic_table(k_max)


def as_fraction(p):
    """Convert p to an exact Fraction (floats are read through their decimal repr)."""
    if isinstance(p, Fraction):
        return p
    if isinstance(p, float):
        return Fraction(repr(p))
    return Fraction(p)


def check_p(p):
    p = as_fraction(p)
    if p < 1:
        raise DomainError(f"p-geometric rules need p >= 1, got {p}")
    return p


def _intersection_sizes(profile, committee):
    profile.check_committee(committee)
    mask = bits(committee)
    return [(ballot & mask).bit_count() for ballot in profile.masks]


def av_score(profile, committee):
    """Total number of approvals committee members receive."""
    return Fraction(sum(_intersection_sizes(profile, committee)))


def cc_score(profile, committee):
    """Number of voters approving at least one committee member."""
    return Fraction(sum(1 for s in _intersection_sizes(profile, committee) if s > 0))


def pav_score(profile, committee):
    sizes = _intersection_sizes(profile, committee)
    table = harmonic_table(max(len(committee), 1))
    return sum((table[s] for s in sizes), Fraction(0))


def pgeometric_score(profile, committee, p):
    """Sum over voters of 1/p + 1/p^2 + ... + 1/p^s, s = approved members."""
    p = check_p(p)
    sizes = _intersection_sizes(profile, committee)
    cumulative = [Fraction(0)]
    for j in range(1, len(committee) + 1):
        cumulative.append(cumulative[-1] + 1 / p**j)
    return sum((cumulative[s] for s in sizes), Fraction(0))


def thiele_weights(name, k, p=None):
    """
    Marginal weights w_1, ..., w_k of a Thiele rule.

    A voter with s approved members contributes w_1 + ... + w_s.
    """
    if name == "AV":
        return [Fraction(1)] * k
    if name == "CC":
        return [Fraction(1)] + [Fraction(0)] * (k - 1) if k else []
    if name == "PAV":
        return [Fraction(1, j) for j in range(1, k + 1)]
    if name == "PGEOMETRIC":
        p = check_p(p)
        return [1 / p**j for j in range(1, k + 1)]
    raise DomainError(f"{name} is not a Thiele rule")


@dataclass(frozen=True)
class MonroeAssignment:
    """Voter-to-member assignment respecting the floor/ceil quotas."""

    mapping: tuple
    satisfied_count: int

    def load(self, member):
        return sum(1 for c in self.mapping if c == member)


def monroe_capacities(n, k):
    """(floor(n/k), ceil(n/k), number of members that take the ceiling)."""
    return n // k, -(-n // k), n % k


def monroe_score(profile, committee):
    """
    Monroe score of a committee and an optimal assignment witnessing it.

    Unsatisfied voters can be assigned anywhere, so the score is the largest
    set of satisfied voters that fits the quotas. It is a max flow:
    source -> member (capacity floor(n/k)), source -> shared surplus node
    (capacity n mod k) -> member (capacity 1), member -> approving voter,
    voter -> sink. Any such partial assignment extends to a full Monroe
    assignment by filling the remaining slots with the other voters.
    """
    profile.check_committee(committee)
    committee = tuple(sorted(set(committee)))
    k = len(committee)
    if k == 0:
        raise DomainError("Monroe score needs a nonempty committee")
    n = profile.num_voters
    low, high, surplus = monroe_capacities(n, k)

    source, bonus, sink = 0, k + 1, k + n + 2
    edges = []
    for j, c in enumerate(committee):
        node = 1 + j
        if low:
            edges.append((source, node, low))
        if surplus:
            edges.append((bonus, node, 1))
        bit = 1 << c
        for i, ballot in enumerate(profile.masks):
            if ballot & bit:
                edges.append((node, k + 2 + i, 1))
    if surplus:
        edges.append((source, bonus, surplus))
    for i in range(n):
        edges.append((k + 2 + i, sink, 1))
    value, flow = max_flow(k + n + 3, edges, source, sink)

    mapping = [None] * n
    counts = [0] * k
    for (u, v), f in flow.items():
        if 1 <= u <= k and k + 2 <= v < k + 2 + n:
            mapping[v - k - 2] = committee[u - 1]
            counts[u - 1] += 1
    caps = [low] * k
    extra = surplus
    for j in range(k):
        if counts[j] > low:
            caps[j] = high
            extra -= 1
    for j in range(k):
        if extra and caps[j] == low:
            caps[j] = high
            extra -= 1
    slot = 0
    for i in range(n):
        if mapping[i] is None:
            while counts[slot] >= caps[slot]:
                slot += 1
            mapping[i] = committee[slot]
            counts[slot] += 1
    return Fraction(value), MonroeAssignment(tuple(mapping), value)


__all__ = [
    "MonroeAssignment",
    "as_fraction",
    "av_score",
    "cc_score",
    "harmonic",
    "harmonic_table",
    "monroe_capacities",
    "monroe_score",
    "pav_score",
    "pgeometric_score",
    "thiele_weights",
]
