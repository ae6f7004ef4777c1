"""
Election data model: approval profiles and committees.

Candidates and voters are dense 0-based indices. Approval sets are stored as
integer bitsets, so ``A(i) & W`` is a single machine operation for small m.
"""

import itertools
import math
import os
from functools import cached_property

import numpy as np

DEFAULT_BUDGET = 10**7
BUDGET_ENV_VAR = "ABCRATIO_BUDGET"


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ParameterError(ValueError):
    """Invalid parameters for a generator or experiment."""


class InfeasibleError(ValueError):
    """The requested load distribution does not exist."""


class DegenerateProfileError(DomainError):
    """A ratio has a zero optimum (nobody approves any candidate)."""


class BudgetExceeded(RuntimeError):
    """Committee enumeration would exceed the configured budget."""

    def __init__(self, num_committees, budget):
        self.num_committees = num_committees
        self.budget = budget
        super().__init__(
            f"enumeration of C(m,k) = {num_committees} committees exceeds budget {budget}"
        )


def enumeration_budget():
    """Return the committee enumeration cap (env var override, else 10^7)."""
    value = os.environ.get(BUDGET_ENV_VAR)
    if value is None:
        return DEFAULT_BUDGET
    try:
        return int(value)
    except ValueError:
        raise ParameterError(f"{BUDGET_ENV_VAR} must be an integer, got {value!r}") from None


def bits(candidates):
    """Bitset of an iterable of candidate indices."""
    mask = 0
    for c in candidates:
        mask |= 1 << c
    return mask


def members(mask):
    """Sorted candidate indices contained in a bitset."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Profile:
    """
    An approval profile: one approval set per voter over ``num_candidates``.

    Parameters
    ----------
    num_candidates : int
        Number of candidates m (at least 1).
    approval_sets : iterable of iterable of int
        One approval set per voter. Empty ballots are allowed.

    The object is immutable after construction.
    """

    def __init__(self, num_candidates, approval_sets):
        if num_candidates < 1:
            raise DomainError("a profile needs at least one candidate")
        masks = []
        for i, ballot in enumerate(approval_sets):
            ballot = set(ballot)
            for c in ballot:
                if not (isinstance(c, (int, np.integer)) and 0 <= c < num_candidates):
                    raise DomainError(
                        f"voter {i} approves invalid candidate {c!r} (m={num_candidates})"
                    )
            masks.append(bits(int(c) for c in ballot))
        if not masks:
            raise DomainError("a profile needs at least one voter")
        self._m = num_candidates
        self._ballots = tuple(masks)

    @classmethod
    def from_masks(cls, num_candidates, masks):
        profile = cls.__new__(cls)
        if num_candidates < 1 or not masks:
            raise DomainError("a profile needs at least one candidate and one voter")
        limit = 1 << num_candidates
        for mask in masks:
            if mask < 0 or mask >= limit:
                raise DomainError(f"ballot bitset {mask} out of range for m={num_candidates}")
        profile._m = num_candidates
        profile._ballots = tuple(masks)
        return profile

    @property
    def num_candidates(self):
        return self._m

    @property
    def num_voters(self):
        return len(self._ballots)

    @property
    def masks(self):
        """Per-voter approval bitsets."""
        return self._ballots

    def approval_set(self, voter):
        return frozenset(members(self._ballots[voter]))

    @property
    def approval_sets(self):
        return [self.approval_set(i) for i in range(self.num_voters)]

    @cached_property
    def matrix(self):
        """Boolean n x m approval matrix (uint8)."""
        mat = np.zeros((self.num_voters, self._m), dtype=np.uint8)
        for i, mask in enumerate(self._ballots):
            for c in members(mask):
                mat[i, c] = 1
        return mat

    @cached_property
    def approval_counts(self):
        """Number of approvers per candidate."""
        return [int(x) for x in self.matrix.sum(axis=0)]

    def check_candidate(self, c):
        if not (isinstance(c, (int, np.integer)) and 0 <= c < self._m):
            raise DomainError(f"invalid candidate {c!r} for a profile with m={self._m}")

    def check_committee(self, committee):
        for c in committee:
            self.check_candidate(c)

    def __eq__(self, other):
        if not isinstance(other, Profile):
            return NotImplemented
        return self._m == other._m and self._ballots == other._ballots

    def __hash__(self):
        return hash((self._m, self._ballots))

    def __repr__(self):
        return f"Profile(m={self._m}, n={self.num_voters})"

    def __str__(self):
        lines = [repr(self)]
        for i, mask in enumerate(self._ballots):
            lines.append(f"  voter {i}: {{{', '.join(map(str, members(mask)))}}}")
        return "\n".join(lines)


def committee(candidates):
    """Normalise an iterable of candidates to a committee (sorted tuple of distinct ints)."""
    out = tuple(sorted({int(c) for c in candidates}))
    return out


def approvers(profile, c):
    """Set of voters approving candidate ``c``."""
    profile.check_candidate(c)
    bit = 1 << c
    return {i for i, mask in enumerate(profile.masks) if mask & bit}


def covered_voters(profile, candidates):
    """Voters approving at least one candidate in ``candidates``."""
    profile.check_committee(candidates)
    mask = bits(candidates)
    return {i for i, ballot in enumerate(profile.masks) if ballot & mask}


def num_committees(m, k):
    if k < 0 or k > m:
        raise DomainError(f"committee size k={k} must satisfy 0 <= k <= m={m}")
    return math.comb(m, k)


def all_committees(m, k):
    """Iterate over all size-k committees of range(m) in lexicographic order."""
    num_committees(m, k)
    return itertools.combinations(range(m), k)


def check_budget(m, k, budget=None):
    """Raise :class:`BudgetExceeded` if C(m,k) is above the budget."""
    total = num_committees(m, k)
    if budget is None:
        budget = enumeration_budget()
    if total > budget:
        raise BudgetExceeded(total, budget)
    return total
