"""
Sequential rules: seq-Thiele (AV, CC, PAV, p-geometric), Greedy Monroe and
seq-Phragmen.

Ties are broken towards the smallest candidate index.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from abcratio.core import DomainError, InfeasibleError, committee as as_committee
from abcratio.rules import Rule, RuleOutcome, parse_rule
from abcratio.scoring import MonroeAssignment, monroe_capacities, thiele_weights


@dataclass(frozen=True)
class LoadVector:
    """Per-voter Phragmen loads after ``round`` selections."""

    loads: tuple
    round: int

    @property
    def total(self):
        return sum(self.loads, Fraction(0))

    @property
    def max_load(self):
        return max(self.loads, default=Fraction(0))


@dataclass(frozen=True)
class SeqTrace:
    """
    Selection order plus per-round diagnostics.

    ``values`` holds the marginal score (Thiele rules), the satisfied-group
    size (Greedy Monroe) or the water-filling threshold (seq-Phragmen) of each
    selected candidate. ``groups`` lists the voters removed per round by
    Greedy Monroe.
    """

    order: tuple
    values: tuple
    groups: tuple = ()
    loads: tuple = field(default=(), compare=False)

    def prefix(self, j):
        return as_committee(self.order[:j])


def _check_k(profile, k):
    if not 1 <= k <= profile.num_candidates:
        raise DomainError(
            f"committee size k={k} must satisfy 1 <= k <= m={profile.num_candidates}"
        )


def seq_thiele(rule, profile, k):
    """
    Greedy Thiele rule: k rounds, each adding the candidate with the largest
    exact marginal score.

    Returns
    -------
    (tuple, SeqTrace)
    """
    rule = parse_rule(rule)
    if rule.name.startswith("SEQ_"):
        rule = rule.base
    if rule.name not in ("AV", "CC", "PAV", "PGEOMETRIC"):
        raise DomainError(f"{rule} is not a Thiele rule")
    _check_k(profile, k)
    weights = thiele_weights(rule.name, k, rule.p)
    m = profile.num_candidates
    satisfaction = [0] * profile.num_voters
    order, values = [], []
    for _ in range(k):
        best, best_gain = None, None
        for c in range(m):
            if c in order:
                continue
            bit = 1 << c
            gain = sum(
                (weights[satisfaction[i]] for i, ballot in enumerate(profile.masks) if ballot & bit),
                Fraction(0),
            )
            if best_gain is None or gain > best_gain:
                best, best_gain = c, gain
        order.append(best)
        values.append(best_gain)
        bit = 1 << best
        for i, ballot in enumerate(profile.masks):
            if ballot & bit:
                satisfaction[i] += 1
    return as_committee(order), SeqTrace(tuple(order), tuple(values))


def greedy_monroe(profile, k):
    """
    Greedy Monroe.

    Round i removes a group of ceil(n/k) voters for the first n mod k rounds
    and floor(n/k) afterwards. The chosen candidate maximises the number of
    remaining approvers that fit the group; the group takes the
    lowest-indexed approvers and is padded with the lowest-indexed remaining
    non-approvers.

    Returns
    -------
    (tuple, SeqTrace, MonroeAssignment)
    """
    _check_k(profile, k)
    n = profile.num_voters
    low, high, surplus = monroe_capacities(n, k)
    remaining = list(range(n))
    order, values, groups = [], [], []
    mapping = [None] * n
    satisfied = 0
    for rnd in range(k):
        size = high if rnd < surplus else low
        best, best_value, best_supporters = None, -1, None
        for c in range(profile.num_candidates):
            if c in order:
                continue
            bit = 1 << c
            supporters = [i for i in remaining if profile.masks[i] & bit]
            value = min(len(supporters), size)
            if value > best_value:
                best, best_value, best_supporters = c, value, supporters
        group = best_supporters[:size]
        if len(group) < size:
            taken = set(group)
            group += [i for i in remaining if i not in taken][: size - len(group)]
        group = sorted(group)
        removed = set(group)
        remaining = [i for i in remaining if i not in removed]
        for i in group:
            mapping[i] = best
        satisfied += best_value
        order.append(best)
        values.append(best_value)
        groups.append(tuple(group))
    trace = SeqTrace(tuple(order), tuple(values), tuple(groups))
    return as_committee(order), trace, MonroeAssignment(tuple(mapping), satisfied)


def phragmen_round_threshold(loads, approver_set):
    """
    Water-filling level t with sum over approvers of max(0, t - load) = 1.

    Parameters
    ----------
    loads : LoadVector or sequence of Fraction
    approver_set : iterable of int
        Voters approving the candidate.
    """
    if isinstance(loads, LoadVector):
        loads = loads.loads
    levels = sorted(loads[i] for i in approver_set)
    if not levels:
        raise InfeasibleError("a candidate without approvers cannot carry load")
    total = Fraction(1)
    for j, level in enumerate(levels):
        total += level
        t = total / (j + 1)
        if j + 1 == len(levels) or t <= levels[j + 1]:
            return t
    raise AssertionError("unreachable")


def seq_phragmen(profile, k):
    """
    Sequential Phragmen with exact water-filling.

    Each round selects the candidate minimising the resulting maximal voter
    load, then its water-filling threshold, then its index. Earlier loads are
    never redistributed.

    Returns
    -------
    (tuple, SeqTrace, LoadVector)
    """
    _check_k(profile, k)
    n = profile.num_voters
    approver_lists = []
    for c in range(profile.num_candidates):
        bit = 1 << c
        approver_lists.append([i for i in range(n) if profile.masks[i] & bit])
    approvable = sum(1 for a in approver_lists if a)
    if approvable < k:
        raise InfeasibleError(
            f"only {approvable} candidates have approvers; cannot distribute {k} units of load"
        )
    loads = [Fraction(0)] * n
    order, thresholds, history = [], [], []
    for rnd in range(k):
        current_max = max(loads)
        best, best_key = None, None
        for c, supporters in enumerate(approver_lists):
            if c in order or not supporters:
                continue
            t = phragmen_round_threshold(loads, supporters)
            key = (max(t, current_max), t)
            if best_key is None or key < best_key:
                best, best_key = c, key
        t = best_key[1]
        for i in approver_lists[best]:
            if loads[i] < t:
                loads[i] = t
        order.append(best)
        thresholds.append(t)
        history.append(LoadVector(tuple(loads), rnd + 1))
    trace = SeqTrace(tuple(order), tuple(thresholds), loads=tuple(history))
    return as_committee(order), trace, history[-1]


def outcome(rule, profile, k):
    """Wrap a sequential rule's single committee in a :class:`RuleOutcome`."""
    from abcratio.exact import rule_score

    rule = parse_rule(rule)
    if rule.name == "GREEDY_MONROE":
        comm, trace, assignment = greedy_monroe(profile, k)
        return RuleOutcome(rule, k, (comm,), Fraction(assignment.satisfied_count), trace)
    if rule.name == "SEQ_PHRAGMEN":
        comm, trace, loads = seq_phragmen(profile, k)
        return RuleOutcome(rule, k, (comm,), loads.max_load, trace)
    if rule.name in ("SEQ_AV", "SEQ_CC", "SEQ_PAV", "SEQ_PGEOMETRIC"):
        comm, trace = seq_thiele(rule, profile, k)
        return RuleOutcome(rule, k, (comm,), rule_score(rule.base, profile, comm), trace)
    raise DomainError(f"{rule} is not a sequential rule")


__all__ = [
    "LoadVector",
    "Rule",
    "SeqTrace",
    "greedy_monroe",
    "outcome",
    "phragmen_round_threshold",
    "seq_phragmen",
    "seq_thiele",
]
