"""
Optimal (irresolute) rules by exhaustive committee enumeration.

Thiele scores are evaluated on blocks of committees at once: per-voter
intersection counts come from summing approval-matrix columns, and the
rule's cumulative weight table is scaled to integers so that numpy compares
scores exactly. Ties are never broken; every optimal committee is returned.
"""

import itertools
import math
from fractions import Fraction

import numpy as np

from abcratio.core import DomainError, InfeasibleError, bits, check_budget
from abcratio.rules import Rule, RuleOutcome, parse_rule
from abcratio.scoring import monroe_capacities, monroe_score, thiele_weights

CHUNK = 1 << 14
_INT_LIMIT = 2**62


def committee_blocks(m, k, chunk=CHUNK):
    """Yield (B, k) integer arrays of committees in lexicographic order."""
    combos = itertools.combinations(range(m), k)
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.intp).reshape(len(block), k)


def intersection_counts(matrix, block):
    """(n, B) array of |A(i) & W| for each committee W in ``block``."""
    counts = matrix[:, block[:, 0]].astype(np.int16)
    for j in range(1, block.shape[1]):
        counts += matrix[:, block[:, j]]
    return counts


class ScoreTable:
    """
    Integer-scaled cumulative Thiele weights.

    ``values[s] = scale * (w_1 + ... + w_s)``; a committee's exact score is
    ``sum_i values[s_i] / scale``.
    """

    def __init__(self, weights, num_voters):
        cumulative = [Fraction(0)]
        for w in weights:
            cumulative.append(cumulative[-1] + w)
        scale = 1
        for value in cumulative:
            scale = math.lcm(scale, value.denominator)
        ints = [int(value * scale) for value in cumulative]
        self.scale = scale
        dtype = np.int64 if ints[-1] * max(num_voters, 1) < _INT_LIMIT else object
        self.values = np.array(ints, dtype=dtype)

    def scores(self, counts):
        return self.values[counts].sum(axis=0)

    def to_fraction(self, value):
        return Fraction(int(value), self.scale)


def _thiele_table(rule, k, n):
    return ScoreTable(thiele_weights(rule.name, k, rule.p), n)


def thiele_scan(profile, k, rules, budget=None):
    """
    Optimal score and all optimal committees for several Thiele rules at once.

    Returns a dict mapping each rule to ``(optimum, winners)``.
    """
    _check_size(profile, k)
    check_budget(profile.num_candidates, k, budget)
    rules = [parse_rule(r) for r in rules]
    for rule in rules:
        if rule.name not in ("AV", "CC", "PAV", "PGEOMETRIC"):
            raise DomainError(f"{rule} is not an optimal Thiele rule")
    n = profile.num_voters
    tables = [_thiele_table(rule, k, n) for rule in rules]
    best = [None] * len(rules)
    found = [[] for _ in rules]
    matrix = profile.matrix
    for block in committee_blocks(profile.num_candidates, k):
        counts = intersection_counts(matrix, block)
        for r, table in enumerate(tables):
            scores = table.scores(counts)
            top = scores.max()
            if best[r] is None or top > best[r]:
                best[r] = top
                found[r] = []
            if top == best[r]:
                found[r].extend(tuple(int(c) for c in row) for row in block[scores == top])
    return {
        rule: (tables[r].to_fraction(best[r]), tuple(found[r]))
        for r, rule in enumerate(rules)
    }


def score_extremes(profile, k, committees, rule):
    """Min score of ``committees`` and max score over all size-k committees."""
    rule = parse_rule(rule)
    table = _thiele_table(rule, k, profile.num_voters)
    chosen = np.array(committees, dtype=np.intp).reshape(len(committees), k)
    low = table.scores(intersection_counts(profile.matrix, chosen)).min()
    top = None
    for block in committee_blocks(profile.num_candidates, k):
        value = table.scores(intersection_counts(profile.matrix, block)).max()
        top = value if top is None or value > top else top
    return table.to_fraction(low), table.to_fraction(top)


def _check_size(profile, k):
    if not 1 <= k <= profile.num_candidates:
        raise DomainError(
            f"committee size k={k} must satisfy 1 <= k <= m={profile.num_candidates}"
        )


def monroe_winners(profile, k, budget=None):
    """
    All committees with maximal Monroe score.

    Committees are visited in decreasing order of an upper bound on the
    Monroe score (min of CC score and the quota-capped approval total); the
    scan stops once the bound drops below the best score found.
    """
    _check_size(profile, k)
    check_budget(profile.num_candidates, k, budget)
    n = profile.num_voters
    _, high, _ = monroe_capacities(n, k)
    capped = np.minimum(np.array(profile.approval_counts, dtype=np.int64), high)
    cc_table = ScoreTable(thiele_weights("CC", k), n)
    bounds, committees = [], []
    for block in committee_blocks(profile.num_candidates, k):
        cc = cc_table.scores(intersection_counts(profile.matrix, block))
        bounds.append(np.minimum(cc, capped[block].sum(axis=1)))
        committees.append(block)
    bounds = np.concatenate(bounds)
    committees = np.concatenate(committees)
    order = np.argsort(-bounds, kind="stable")
    best, winners, witnesses = -1, [], {}
    for idx in order:
        if bounds[idx] < best:
            break
        comm = tuple(int(c) for c in committees[idx])
        score, assignment = monroe_score(profile, comm)
        if score > best:
            best, winners, witnesses = score, [], {}
        if score == best:
            winners.append(comm)
            witnesses[comm] = assignment
    winners.sort()
    return Fraction(best), tuple(winners), witnesses


def optimal_phragmen_load(profile, committee):
    """
    Smallest possible maximal voter load when each member's unit of load is
    split among its approvers.

    Equals the maximum of |W'| / |N(W')| over nonempty subsets W' of the
    committee (Hall-type condition from max-flow/min-cut).
    """
    profile.check_committee(committee)
    comm = sorted(set(committee))
    if not comm:
        raise DomainError("empty committee")
    cover = _voter_masks(profile)
    for c in comm:
        if cover[c] == 0:
            raise InfeasibleError(f"candidate {c} has no approvers; its load cannot be placed")
    best = Fraction(0)
    for size in range(1, len(comm) + 1):
        for subset in itertools.combinations(comm, size):
            mask = 0
            for c in subset:
                mask |= cover[c]
            best = max(best, Fraction(size, mask.bit_count()))
    return best


def _voter_masks(profile):
    out = []
    for c in range(profile.num_candidates):
        bit = 1 << c
        out.append(bits(i for i, ballot in enumerate(profile.masks) if ballot & bit))
    return out


def opt_phragmen_winners(profile, k, budget=None):
    """
    Committees minimising the optimal Phragmen load.

    Loads of all candidate subsets up to size k are built level by level:
    load(S) = max(|S| / |N(S)|, max_c load(S - c)). Committees containing a
    candidate without approvers have infinite load.
    """
    _check_size(profile, k)
    check_budget(profile.num_candidates, k, budget)
    cover = _voter_masks(profile)
    m = profile.num_candidates
    level = {0: (0, Fraction(0))}
    for size in range(1, k + 1):
        nxt = {}
        for subset in itertools.combinations(range(m), size):
            key = bits(subset)
            last = subset[-1]
            parent_cover, _ = level[key ^ (1 << last)]
            mask = parent_cover | cover[last]
            covered = mask.bit_count()
            load = Fraction(size, covered) if covered else math.inf
            for c in subset:
                sub_load = level[key ^ (1 << c)][1]
                if sub_load > load:
                    load = sub_load
            nxt[key] = (mask, load)
        level = nxt
    best = min(load for _, load in level.values())
    if best == math.inf:
        raise InfeasibleError(f"every size-{k} committee contains a candidate without approvers")
    winners = sorted(
        tuple(c for c in range(m) if key >> c & 1)
        for key, (_, load) in level.items()
        if load == best
    )
    return best, tuple(winners)


def winners(rule, profile, k, budget=None):
    """
    All winning committees of an optimal rule.

    Parameters
    ----------
    rule : Rule or str
        One of AV, CC, PAV, PGEOMETRIC(p), MONROE, OPT_PHRAGMEN.
    profile : Profile
    k : int
    budget : int, optional
        Cap on C(m, k); defaults to the environment/10^7 budget.

    Returns
    -------
    RuleOutcome
    """
    rule = parse_rule(rule)
    if rule.name == "MONROE":
        optimum, comms, witnesses = monroe_winners(profile, k, budget)
        return RuleOutcome(rule, k, comms, optimum, witnesses)
    if rule.name == "OPT_PHRAGMEN":
        optimum, comms = opt_phragmen_winners(profile, k, budget)
        return RuleOutcome(rule, k, comms, optimum)
    if rule.sequential:
        raise DomainError(f"{rule} is sequential; use abcratio.sequential")
    optimum, comms = thiele_scan(profile, k, [rule], budget)[rule]
    return RuleOutcome(rule, k, comms, optimum)


def rule_score(rule, profile, committee):
    """Exact score of a committee under an optimal rule (load for OPT_PHRAGMEN)."""
    from abcratio import scoring

    rule = parse_rule(rule)
    if rule.name == "AV":
        return scoring.av_score(profile, committee)
    if rule.name == "CC":
        return scoring.cc_score(profile, committee)
    if rule.name == "PAV":
        return scoring.pav_score(profile, committee)
    if rule.name == "PGEOMETRIC":
        return scoring.pgeometric_score(profile, committee, rule.p)
    if rule.name == "MONROE":
        return scoring.monroe_score(profile, committee)[0]
    if rule.name == "OPT_PHRAGMEN":
        return optimal_phragmen_load(profile, committee)
    raise DomainError(f"{rule} has no committee score")


__all__ = [
    "Rule",
    "committee_blocks",
    "intersection_counts",
    "monroe_winners",
    "opt_phragmen_winners",
    "optimal_phragmen_load",
    "rule_score",
    "score_extremes",
    "thiele_scan",
    "winners",
]
