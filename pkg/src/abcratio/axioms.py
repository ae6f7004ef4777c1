"""
Efficiency (domination between committees) and lower quota on party-list
profiles.
"""

from dataclasses import dataclass

import numpy as np

from abcratio.core import DomainError, bits, check_budget, committee as as_committee
from abcratio.exact import committee_blocks, intersection_counts


@dataclass(frozen=True)
class DominationWitness:
    """A committee dominating another, and one voter strictly better off."""

    dominator: tuple
    strictly_better_voter: int


@dataclass(frozen=True)
class CohesiveGroup:
    voters: frozenset
    level: int
    common_candidates: frozenset


def _sizes(profile, comm):
    mask = bits(comm)
    return [(ballot & mask).bit_count() for ballot in profile.masks]


def dominates(profile, first, second):
    """
    True if every voter approves at least as many members of ``first`` as of
    ``second`` and some voter approves strictly more.
    """
    first, second = as_committee(first), as_committee(second)
    if len(first) != len(second):
        raise DomainError(
            f"committees of different sizes ({len(first)} and {len(second)}) cannot be compared"
        )
    profile.check_committee(first)
    profile.check_committee(second)
    strict = False
    for a, b in zip(_sizes(profile, first), _sizes(profile, second)):
        if a < b:
            return False
        strict = strict or a > b
    return strict


def find_dominator(profile, comm, k=None, budget=None):
    """
    First committee (lexicographic order) that dominates ``comm``, or None.

    The scan is exhaustive over all committees of the same size.
    """
    comm = as_committee(comm)
    profile.check_committee(comm)
    if k is None:
        k = len(comm)
    if k != len(comm):
        raise DomainError(f"committee {comm} does not have size {k}")
    check_budget(profile.num_candidates, k, budget)
    base = np.array(_sizes(profile, comm), dtype=np.int16)[:, None]
    for block in committee_blocks(profile.num_candidates, k):
        counts = intersection_counts(profile.matrix, block)
        diff = counts - base
        hits = np.flatnonzero((diff >= 0).all(axis=0) & (diff > 0).any(axis=0))
        if hits.size:
            col = hits[0]
            voter = int(np.flatnonzero(diff[:, col] > 0)[0])
            return DominationWitness(tuple(int(c) for c in block[col]), voter)
    return None


def dominating_all(profile, committees, budget=None):
    """
    First committee dominating every committee in ``committees``, or None.

    An irresolute rule is efficient on a profile iff this returns None for
    its set of winners.
    """
    committees = [as_committee(c) for c in committees]
    if not committees:
        raise DomainError("at least one committee is required")
    k = len(committees[0])
    for comm in committees:
        profile.check_committee(comm)
        if len(comm) != k:
            raise DomainError("all committees must have the same size")
    check_budget(profile.num_candidates, k, budget)
    bases = [np.array(_sizes(profile, c), dtype=np.int16)[:, None] for c in committees]
    for block in committee_blocks(profile.num_candidates, k):
        counts = intersection_counts(profile.matrix, block)
        ok = np.ones(len(block), dtype=bool)
        for base in bases:
            diff = counts - base
            ok &= (diff >= 0).all(axis=0) & (diff > 0).any(axis=0)
            if not ok.any():
                break
        hits = np.flatnonzero(ok)
        if hits.size:
            return tuple(int(c) for c in block[hits[0]])
    return None


def is_party_list(profile):
    """True if any two ballots are either equal or disjoint."""
    distinct = sorted(set(profile.masks))
    for i, a in enumerate(distinct):
        for b in distinct[i + 1 :]:
            if a & b:
                return False
    return True


def parties(profile):
    """Map each distinct ballot (bitset) to the list of voters casting it."""
    groups = {}
    for i, ballot in enumerate(profile.masks):
        groups.setdefault(ballot, []).append(i)
    return groups


def cohesive_groups(profile, k):
    """
    Maximal cohesive groups of a party-list profile: one per party with
    its largest level l such that the party has at least n*l/k voters and
    l commonly approved candidates.
    """
    if not is_party_list(profile):
        raise DomainError("lower quota is only defined on party-list profiles")
    n = profile.num_voters
    out = []
    for ballot, voters in parties(profile).items():
        size = ballot.bit_count()
        level = min(len(voters) * k // n, size)
        if level > 0:
            common = frozenset(c for c in range(profile.num_candidates) if ballot >> c & 1)
            out.append(CohesiveGroup(frozenset(voters), level, common))
    return out


def lower_quota_holds(profile, k, comm):
    """Every l-cohesive party receives at least l committee members."""
    comm = as_committee(comm)
    profile.check_committee(comm)
    mask = bits(comm)
    for group in cohesive_groups(profile, k):
        if (bits(group.common_candidates) & mask).bit_count() < group.level:
            return False
    return True


__all__ = [
    "CohesiveGroup",
    "DominationWitness",
    "cohesive_groups",
    "dominates",
    "dominating_all",
    "find_dominator",
    "is_party_list",
    "lower_quota_holds",
    "parties",
]
