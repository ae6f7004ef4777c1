import itertools

import pytest
from hypothesis import given, settings

import oracles
from abcratio.axioms import (
    cohesive_groups,
    dominates,
    dominating_all,
    find_dominator,
    is_party_list,
    lower_quota_holds,
)
from abcratio.constructions import efficiency_fixture, example_profile, gen
from abcratio.core import BudgetExceeded, DomainError, Profile
from abcratio.rules import compute
from strategies import party_list_profiles, profile_and_k


def test_fixture_dominations():
    fx = efficiency_fixture(1)
    assert dominates(fx.profile, (0, 1, 2), (0, 3, 4))
    assert not dominates(fx.profile, (0, 3, 4), (0, 3, 4))
    fx = efficiency_fixture(2)
    assert dominates(fx.profile, (0, 1), (2, 3))
    fx = efficiency_fixture(3)
    assert find_dominator(fx.profile, (2, 3)).dominator == (0, 1)
    with pytest.raises(DomainError):
        dominates(fx.profile, (0,), (2, 3))


def test_av_winner_undominated():
    profile = example_profile()
    assert find_dominator(profile, (0, 1, 2)) is None


def test_universal_voter():
    profile = Profile(4, [[0, 1, 2, 3]])
    assert find_dominator(profile, (0, 1)) is None


def test_find_dominator_budget():
    with pytest.raises(BudgetExceeded):
        find_dominator(Profile(12, [[0]]), (0, 1, 2, 3, 4), budget=10)


@settings(max_examples=100)
@given(profile_and_k(max_m=6, max_n=6))
def test_find_dominator_matches_brute_force(case):
    profile, k = case
    comm = tuple(range(k))
    expected = next(
        (c for c in itertools.combinations(range(profile.num_candidates), k) if oracles.dominated(profile, c, comm)),
        None,
    )
    found = find_dominator(profile, comm)
    assert (found and found.dominator) == expected or (found is None and expected is None)
    if found:
        voter = found.strictly_better_voter
        ballot = profile.approval_set(voter)
        assert len(ballot & set(found.dominator)) > len(ballot & set(comm))


@settings(max_examples=60)
@given(profile_and_k(max_m=6, max_n=8, max_k=4))
def test_thiele_winners_are_efficient(case):
    profile, k = case
    for rule in ("AV", "PAV", "2-geometric"):
        for comm in compute(rule, profile, k).winners:
            assert find_dominator(profile, comm) is None
    assert dominating_all(profile, compute("CC", profile, k).winners) is None


def test_cc_ties_can_include_dominated_committees():
    profile = Profile(3, [[0, 1]])
    winners = compute("CC", profile, 2).winners
    assert (0, 2) in winners
    assert find_dominator(profile, (0, 2)).dominator == (0, 1)
    assert dominating_all(profile, winners) is None


def test_dominating_all_on_fixtures():
    for which in (1, 2, 3):
        fx = efficiency_fixture(which)
        for rule in fx.rules:
            winners = compute(rule, fx.profile, fx.k).winners
            assert dominating_all(fx.profile, winners) is not None


def test_party_list_detection():
    assert is_party_list(example_profile())
    assert is_party_list(gen("LQ_AV", 4, 3)[0])
    assert not is_party_list(Profile(3, [[0, 1], [1, 2]]))


def test_lower_quota_examples():
    profile, _ = gen("LQ_AV", 4, 3)
    # s = 2 groups share X; groups 2 and 3 each hold n/k voters and own one candidate
    assert lower_quota_holds(profile, 4, (0, 1, 4, 5))
    assert not lower_quota_holds(profile, 4, (0, 1, 2, 4))
    whole = Profile(5, [[0, 1, 2, 3]] * 5)
    assert lower_quota_holds(whole, 2, (0, 3))
    assert not lower_quota_holds(whole, 2, (0, 4))
    small = Profile(4, [[0]] + [[1, 2, 3]] * 9)
    groups = {min(g.common_candidates): g.level for g in cohesive_groups(small, 2)}
    assert groups == {1: 1}
    assert lower_quota_holds(small, 2, (1, 2))
    with pytest.raises(DomainError):
        lower_quota_holds(Profile(3, [[0, 1], [1, 2]]), 2, (0, 1))


def test_single_party_requires_full_committee():
    profile = Profile(5, [[0, 1, 2]] * 4)
    assert cohesive_groups(profile, 3)[0].level == 3
    assert lower_quota_holds(profile, 3, (0, 1, 2))
    assert not lower_quota_holds(profile, 3, (0, 1, 3))


@settings(max_examples=100)
@given(party_list_profiles())
def test_proportional_rules_satisfy_lower_quota(profile):
    for k in range(1, min(profile.num_candidates, 4) + 1):
        for rule in ("PAV", "seq-PAV", "seq-Phragmen"):
            for comm in compute(rule, profile, k).winners:
                assert lower_quota_holds(profile, k, comm), (rule, k, comm)
